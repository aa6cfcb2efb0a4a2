use crate::error::Error;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    I2,
    H,
    F,
    E,
}

/// An irreducible finite Coxeter type such as `A3`, `D5` or `I2(7)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoxeterType {
    pub family: Family,
    pub rank: usize,
    /// Braid-relation length, only for `I2`.
    pub m: Option<u32>,
}

impl CoxeterType {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let t = Self {
            family,
            rank,
            m: None,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn dihedral(m: u32) -> Result<Self, Error> {
        let t = Self {
            family: Family::I2,
            rank: 2,
            m: Some(m),
        };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<(), Error> {
        let ok = match self.family {
            Family::A => self.rank >= 1,
            Family::B => self.rank >= 2,
            Family::D => self.rank >= 4,
            Family::I2 => self.rank == 2 && self.m.is_some_and(|m| m >= 3),
            Family::H => matches!(self.rank, 3 | 4),
            Family::F => self.rank == 4,
            Family::E => matches!(self.rank, 6..=8),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedType(self.to_string()))
        }
    }

    /// Whether the type is one of A, B, D, where a permutation model is available.
    pub fn is_classical(&self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::D)
    }

    /// Group order, used to refuse enumerations that are out of reach.
    pub fn group_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::I2 => 2 * self.m.unwrap() as u128,
            Family::H => {
                if n == 3 {
                    120
                } else {
                    14400
                }
            }
            Family::F => 1152,
            Family::E => match n {
                6 => 51840,
                7 => 2903040,
                _ => 696729600,
            },
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::I2 => write!(f, "I2({})", self.m.unwrap_or(0)),
            fam => write!(f, "{:?}{}", fam, self.rank),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a Coxeter type: {s:?}"));
        if let Some(rest) = s.strip_prefix("I2(") {
            let m = rest.strip_suffix(')').ok_or_else(bad)?;
            let m: u32 = m.trim().parse().map_err(|_| bad())?;
            return CoxeterType::dihedral(m);
        }
        let mut chars = s.chars();
        let fam = match chars.next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'D' => Family::D,
            'H' => Family::H,
            'F' => Family::F,
            'E' => Family::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CoxeterType::new(fam, rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["A3", "B4", "D5", "I2(7)", "H3", "F4", "E6", "E8"] {
            let t: CoxeterType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
    }

    #[test]
    fn rejects_outside_classification() {
        for s in ["A0", "B1", "D3", "I2(2)", "H5", "F3", "E9", "G2", "X"] {
            assert!(s.parse::<CoxeterType>().is_err(), "{s}");
        }
        assert!(matches!(
            "E5".parse::<CoxeterType>(),
            Err(Error::UnsupportedType(_))
        ));
    }

    #[test]
    fn orders() {
        assert_eq!("A3".parse::<CoxeterType>().unwrap().group_order(), 24);
        assert_eq!("D4".parse::<CoxeterType>().unwrap().group_order(), 192);
        assert_eq!("B3".parse::<CoxeterType>().unwrap().group_order(), 48);
    }
}
