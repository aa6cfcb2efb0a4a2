//! The Iwahori-Hecke algebra with `T_s^2 = (v^-2 - 1) T_s + v^-2`, its Kazhdan-Lusztig
//! basis, and positivity of simple dual braids.

mod laurent;

pub use laurent::LaurentPoly;

use crate::absolute::{enumerate_nc, StandardCoxeterElement};
use crate::error::{Error, Result};
use crate::garside::{dual_atoms, positive_lift, simple_dual, BraidWord};
use crate::report::Report;
use crate::system::{build_system, CoxeterSystem, Element};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

/// Largest group the algebra is built for; the KL basis is quadratic in `|W|`.
pub const MAX_ORDER: usize = 5000;

/// An element of the algebra in the standard basis, keyed by the index of `x` in
/// [`Hecke::elements`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeckeElement {
    pub coords: BTreeMap<usize, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `p * T_x` for the element with index `x`.
    pub fn term(x: usize, p: LaurentPoly) -> Self {
        let mut h = Self::zero();
        h.add_term(x, &p);
        h
    }

    pub fn add_term(&mut self, x: usize, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let e = self.coords.entry(x).or_default();
        *e += p;
        if e.is_zero() {
            self.coords.remove(&x);
        }
    }

    /// `self += p * other`.
    pub fn add_scaled(&mut self, other: &HeckeElement, p: &LaurentPoly) {
        for (&x, q) in &other.coords {
            self.add_term(x, &(q * p));
        }
    }

    pub fn coefficient(&self, x: usize) -> LaurentPoly {
        self.coords.get(&x).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

/// Multiplication tables for the standard basis of `H(W)`.
#[derive(Clone, Debug)]
pub struct Hecke {
    rank: usize,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    lengths: Vec<usize>,
    /// `right[x][s]` is the index of `xs`.
    right: Vec<Vec<usize>>,
}

impl Hecke {
    pub fn new(sys: &CoxeterSystem) -> Result<Self> {
        let elements = sys.elements();
        if elements.len() > MAX_ORDER {
            return Err(Error::CapExceeded(MAX_ORDER));
        }
        let index: HashMap<Element, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let lengths = elements.iter().map(|w| w.length()).collect();
        let right = elements
            .iter()
            .map(|w| {
                (0..sys.rank())
                    .map(|s| index[&w.compose(sys.simple(s))])
                    .collect()
            })
            .collect();
        Ok(Self {
            rank: sys.rank(),
            elements,
            index,
            lengths,
            right,
        })
    }

    /// Group elements, sorted by length.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn index_of(&self, w: &Element) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn length(&self, x: usize) -> usize {
        self.lengths[x]
    }

    pub fn identity(&self) -> HeckeElement {
        HeckeElement::term(0, LaurentPoly::one())
    }

    /// `T_w`.
    pub fn standard(&self, w: &Element) -> Result<HeckeElement> {
        let x = self.index_of(w).ok_or(Error::NotFound)?;
        Ok(HeckeElement::term(x, LaurentPoly::one()))
    }

    /// `a * T_s`.
    pub fn mul_simple(&self, a: &HeckeElement, s: usize) -> HeckeElement {
        let q = LaurentPoly::monomial(1, -2);
        let q1 = LaurentPoly::from_terms(&[(1, -2), (-1, 0)]);
        let mut out = HeckeElement::zero();
        for (&x, p) in &a.coords {
            let xs = self.right[x][s];
            if self.lengths[xs] > self.lengths[x] {
                out.add_term(xs, p);
            } else {
                out.add_term(x, &(p * &q1));
                out.add_term(xs, &(p * &q));
            }
        }
        out
    }

    /// `a * T_s^{-1}`, with `T_s^{-1} = v^2 T_s + (v^2 - 1)`.
    pub fn mul_simple_inverse(&self, a: &HeckeElement, s: usize) -> HeckeElement {
        let mut out = self.mul_simple(a, s);
        out = HeckeElement {
            coords: out
                .coords
                .into_iter()
                .map(|(x, p)| (x, p.shift(2)))
                .collect(),
        };
        out.add_scaled(a, &LaurentPoly::from_terms(&[(1, 2), (-1, 0)]));
        out
    }

    /// Bilinear product.
    pub fn multiply(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (&y, p) in &b.coords {
            let mut t = a.clone();
            for s in self.word(y) {
                t = self.mul_simple(&t, s);
            }
            out.add_scaled(&t, p);
        }
        out
    }

    /// A reduced word for the element with index `x`, read off the tables.
    fn word(&self, mut x: usize) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.lengths[x]);
        while self.lengths[x] > 0 {
            let s = (0..self.rank)
                .find(|&s| self.lengths[self.right[x][s]] < self.lengths[x])
                .expect("nonidentity element has a right descent");
            w.push(s);
            x = self.right[x][s];
        }
        w.reverse();
        w
    }

    /// The image of a braid under `s -> T_s`.
    pub fn phi(&self, b: &BraidWord) -> HeckeElement {
        let mut h = self.identity();
        for &(s, e) in &b.letters {
            h = if e > 0 {
                self.mul_simple(&h, s)
            } else {
                self.mul_simple_inverse(&h, s)
            };
        }
        h
    }

    /// Bruhat order as `below[x][y] = (y <= x)`, using `y <= x` iff `min(y, ys) <= xs` for a
    /// right descent `s` of `x`.
    pub fn bruhat(&self) -> Vec<Vec<bool>> {
        let n = self.elements.len();
        let mut below = vec![vec![false; n]; n];
        below[0][0] = true;
        for x in 1..n {
            let s = (0..self.rank)
                .find(|&s| self.lengths[self.right[x][s]] < self.lengths[x])
                .expect("nonidentity element has a right descent");
            let xs = self.right[x][s];
            let mut row = below[xs].clone();
            for (y, &b) in below[xs].iter().enumerate() {
                if b {
                    row[self.right[y][s]] = true;
                }
            }
            below[x] = row;
        }
        below
    }
}

/// The two bar-invariant bases with unitriangular change of basis to `H_x = v^l(x) T_x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KlConvention {
    /// `C_s = v T_s + v`, lower coefficients in `v Z[v]`.
    Positive,
    /// `C_s = v T_s - v^-1`, lower coefficients in `v^-1 Z[v^-1]`.
    Negative,
}

impl KlConvention {
    pub fn describe(self) -> &'static str {
        match self {
            KlConvention::Positive => {
                "C_s = v*T_s + v; C_x = H_x + sum_{y<x} h_{y,x} H_y with h_{y,x} in vZ[v], H_x = v^l(x) T_x"
            }
            KlConvention::Negative => {
                "C_s = v*T_s - v^-1; C_x = H_x + sum_{y<x} h_{y,x} H_y with h_{y,x} in v^-1Z[v^-1], H_x = v^l(x) T_x"
            }
        }
    }

    fn simple(self) -> (LaurentPoly, LaurentPoly) {
        // (coefficient of T_s, coefficient of T_e)
        match self {
            KlConvention::Positive => (LaurentPoly::monomial(1, 1), LaurentPoly::monomial(1, 1)),
            KlConvention::Negative => (LaurentPoly::monomial(1, 1), LaurentPoly::monomial(-1, -1)),
        }
    }

    fn admissible(self, p: &LaurentPoly) -> bool {
        p.terms().all(|(k, _)| match self {
            KlConvention::Positive => k > 0,
            KlConvention::Negative => k < 0,
        })
    }
}

/// A Kazhdan-Lusztig basis, stored in the `H_x = v^l(x) T_x` coordinates.
#[derive(Clone, Debug)]
pub struct KlBasis {
    pub convention: KlConvention,
    /// `basis[x]` is `C_x` with coordinates on the `H_y`.
    pub basis: Vec<HeckeElement>,
}

impl KlBasis {
    /// `C_x` in the standard basis.
    pub fn standard_coords(&self, hecke: &Hecke, x: usize) -> HeckeElement {
        to_standard(hecke, &self.basis[x])
    }

    /// The Kazhdan-Lusztig polynomial-like coefficient `h_{y,x}`.
    pub fn coefficient(&self, y: usize, x: usize) -> LaurentPoly {
        self.basis[x].coefficient(y)
    }
}

fn to_standard(hecke: &Hecke, h: &HeckeElement) -> HeckeElement {
    HeckeElement {
        coords: h
            .coords
            .iter()
            .map(|(&y, p)| (y, p.shift(hecke.length(y) as i32)))
            .collect(),
    }
}

fn to_h_basis(hecke: &Hecke, t: &HeckeElement) -> HeckeElement {
    HeckeElement {
        coords: t
            .coords
            .iter()
            .map(|(&y, p)| (y, p.shift(-(hecke.length(y) as i32))))
            .collect(),
    }
}

/// The Kazhdan-Lusztig basis by the recursion `C_{xs} C_s = C_x + sum_z mu(z) C_z`, asserting
/// unitriangularity with respect to Bruhat order.
pub fn kl_basis(hecke: &Hecke, convention: KlConvention) -> Result<KlBasis> {
    let n = hecke.elements.len();
    let below = hecke.bruhat();
    let (ts, te) = convention.simple();
    let mut basis: Vec<HeckeElement> = Vec::with_capacity(n);
    basis.push(HeckeElement::term(0, LaurentPoly::one()));
    for x in 1..n {
        let s = (0..hecke.rank)
            .find(|&s| hecke.lengths[hecke.right[x][s]] < hecke.lengths[x])
            .expect("nonidentity element has a right descent");
        let xs = hecke.right[x][s];
        let prev = to_standard(hecke, &basis[xs]);
        let mut product = hecke.mul_simple(&prev, s);
        product = HeckeElement {
            coords: product.coords.into_iter().map(|(y, p)| (y, &p * &ts)).collect(),
        };
        product.add_scaled(&prev, &te);
        let mut c = to_h_basis(hecke, &product);
        let support: Vec<usize> = c.coords.keys().rev().copied().collect();
        for z in support {
            if z == x {
                continue;
            }
            let mu = c.coefficient(z).coeff(0);
            if mu != 0 {
                let correction = basis[z].clone();
                c.add_scaled(&correction, &LaurentPoly::monomial(-mu, 0));
            }
        }
        if c.coefficient(x) != LaurentPoly::one() {
            return Err(Error::Normalization(format!("C_x has leading coefficient {}", c.coefficient(x))));
        }
        for (&y, p) in &c.coords {
            if y != x && (!below[x][y] || !convention.admissible(p)) {
                return Err(Error::Normalization(format!(
                    "C_x is not unitriangular at index {y}: coefficient {p}"
                )));
            }
        }
        basis.push(c);
    }
    Ok(KlBasis { convention, basis })
}

/// Coordinates of `h` (standard basis) on the `C_x`, by back-substitution from the longest
/// elements down.
pub fn kl_expand(hecke: &Hecke, kl: &KlBasis, h: &HeckeElement) -> BTreeMap<usize, LaurentPoly> {
    let mut rest = to_h_basis(hecke, h);
    let mut out = BTreeMap::new();
    while let Some((&x, p)) = rest.coords.iter().next_back() {
        let p = p.clone();
        rest.add_scaled(&kl.basis[x], &(-&p));
        out.insert(x, p);
    }
    out
}

/// Whether every coordinate of `phi(x y^-1)` on the C-basis is nonnegative, for all `x, y`.
pub fn positivity_holds(hecke: &Hecke, sys: &CoxeterSystem, kl: &KlBasis) -> bool {
    hecke.elements.iter().all(|x| {
        hecke.elements.iter().all(|y| {
            let b = positive_lift(sys, x).concat(&positive_lift(sys, y).inverse());
            kl_expand(hecke, kl, &hecke.phi(&b))
                .values()
                .all(LaurentPoly::is_nonnegative)
        })
    })
}

/// The convention under which `T_x T_y^-1` expands positively in `A1` and `A2`. Computed
/// once and then frozen.
pub fn pinned_convention() -> Result<KlConvention> {
    static PINNED: OnceLock<std::result::Result<KlConvention, String>> = OnceLock::new();
    PINNED
        .get_or_init(|| {
            let mut passing = Vec::new();
            for convention in [KlConvention::Positive, KlConvention::Negative] {
                let ok = ["A1", "A2"].iter().all(|name| {
                    let sys = build_system(name.parse().expect("valid type")).expect("builds");
                    let hecke = Hecke::new(&sys).expect("small group");
                    kl_basis(&hecke, convention)
                        .map(|kl| positivity_holds(&hecke, &sys, &kl))
                        .unwrap_or(false)
                });
                if ok {
                    passing.push(convention);
                }
            }
            match passing[..] {
                [c] => Ok(c),
                [] => Err("neither Kazhdan-Lusztig convention gives positive expansions in A2".into()),
                _ => Err("both Kazhdan-Lusztig conventions pass in A2; refusing to guess".into()),
            }
        })
        .clone()
        .map_err(Error::Normalization)
}

/// For every `x` in `NC(W, c)`, expands `phi(x_c)` on the C-basis and flags negative
/// coefficients.
pub fn check_positivity(sys: &CoxeterSystem, c: &StandardCoxeterElement) -> Result<Report> {
    let convention = pinned_convention()?;
    let hecke = Hecke::new(sys)?;
    let kl = kl_basis(&hecke, convention)?;
    let atoms = dual_atoms(sys, c)?;
    let nc = enumerate_nc(sys, c);
    let mut report = Report::new(
        "positivity",
        sys.ctype().to_string(),
        c.word.iter().map(|&s| sys.label(s)).collect(),
    );
    report.nc_count = nc.len();
    report.header = Some(convention.describe().to_string());
    let results: Vec<Result<(usize, Vec<String>)>> = nc
        .par_iter()
        .map(|x| {
            let expansion = kl_expand(&hecke, &kl, &hecke.phi(&simple_dual(sys, &atoms, &x.element)?));
            let bad = expansion
                .iter()
                .filter(|(_, p)| !p.is_nonnegative())
                .map(|(&w, p)| {
                    format!(
                        "coefficient of C_{:?} is {p}",
                        sys.word_labels(&hecke.elements[w])
                    )
                })
                .collect();
            Ok((expansion.len(), bad))
        })
        .collect();
    for (x, r) in nc.iter().zip(results) {
        let (checked, bad) = r?;
        report.checked += checked;
        for detail in bad {
            report.push(sys.word_labels(&x.element), detail);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests;
