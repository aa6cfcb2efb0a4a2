use crate::error::{Error, Result};
use crate::system::{CoxeterSystem, Element};
use serde::{Deserialize, Serialize};

/// A word in the Artin generators and their inverses; no normalization implied.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    /// `(simple index, exponent)` with exponent `1` or `-1`.
    pub letters: Vec<(usize, i8)>,
}

/// JSON form `{"letters": [[label, exponent], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidJson {
    pub letters: Vec<(i32, i8)>,
}

impl BraidWord {
    pub fn new() -> Self {
        Self::default()
    }

    /// The positive word on the given simple indices.
    pub fn positive(word: &[usize]) -> Self {
        Self {
            letters: word.iter().map(|&s| (s, 1)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, s: usize, exponent: i8) {
        self.letters.push((s, exponent));
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|&(s, e)| (s, -e)).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }

    /// Image in the Coxeter group.
    pub fn project(&self, sys: &CoxeterSystem) -> Element {
        let word: Vec<usize> = self.letters.iter().map(|&(s, _)| s).collect();
        sys.word_element(&word)
    }

    /// Relabel letters through an index map (used to embed parabolic braids).
    pub fn map_letters(&self, map: &[usize]) -> Self {
        Self {
            letters: self.letters.iter().map(|&(s, e)| (map[s], e)).collect(),
        }
    }

    /// Parse `s2 s1 s3^-1 s2`. The empty string and `e` give the trivial braid.
    pub fn parse(sys: &CoxeterSystem, text: &str) -> Result<Self> {
        let mut out = Self::new();
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() || tok == "e" {
                continue;
            }
            let (gen, exp) = match tok.split_once('^') {
                Some((g, "-1")) => (g, -1),
                Some((g, "1")) => (g, 1),
                Some(_) => return Err(Error::Parse(format!("bad exponent in {tok:?}"))),
                None => (tok, 1),
            };
            let word = sys.parse_word(gen)?;
            let [s] = word[..] else {
                return Err(Error::Parse(format!("bad generator {tok:?}")));
            };
            out.push(s, exp);
        }
        Ok(out)
    }

    pub fn format(&self, sys: &CoxeterSystem) -> String {
        if self.is_empty() {
            return "e".to_string();
        }
        self.letters
            .iter()
            .map(|&(s, e)| {
                if e < 0 {
                    format!("{}^-1", sys.simple_name(s))
                } else {
                    sys.simple_name(s)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> BraidJson {
        BraidJson {
            letters: self.letters.iter().map(|&(s, e)| (sys.label(s), e)).collect(),
        }
    }

    pub fn from_json(sys: &CoxeterSystem, json: &BraidJson) -> Result<Self> {
        let mut out = Self::new();
        for &(label, e) in &json.letters {
            if e != 1 && e != -1 {
                return Err(Error::Parse(format!("exponent {e} is not +-1")));
            }
            let s = sys
                .index_of_label(label)
                .ok_or_else(|| Error::Parse(format!("no generator with label {label}")))?;
            out.push(s, e);
        }
        Ok(out)
    }
}

/// Positive lift of `w` along its ShortLex reduced word.
pub fn positive_lift(sys: &CoxeterSystem, w: &Element) -> BraidWord {
    BraidWord::positive(&sys.reduced_word(w))
}

/// The Garside element, positive lift of the longest element.
pub fn delta(sys: &CoxeterSystem) -> BraidWord {
    positive_lift(sys, sys.longest())
}

/// The Mikado braid `x_{N(y)}`: lift a reduced word `s_1...s_k` of `x` with `s_i` inverted
/// exactly when `s_k...s_{i+1} s_i s_{i+1}...s_k` lies in `N(y)`.
pub fn mikado_lift(sys: &CoxeterSystem, x: &Element, y: &Element) -> BraidWord {
    mikado_lift_word(sys, &sys.reduced_word(x), y)
}

/// [`mikado_lift`] along a given reduced word.
pub fn mikado_lift_word(sys: &CoxeterSystem, word: &[usize], y: &Element) -> BraidWord {
    let y_inv = y.inverse();
    let mut suffix = sys.identity().clone();
    let mut letters = vec![(0, 1); word.len()];
    for (i, &s) in word.iter().enumerate().rev() {
        let root = suffix.apply(s) % sys.positive_count();
        let e = if sys.in_inversion_set_of_inverse(&y_inv, root) {
            -1
        } else {
            1
        };
        letters[i] = (s, e);
        suffix = suffix.compose(sys.simple(s));
    }
    BraidWord { letters }
}
