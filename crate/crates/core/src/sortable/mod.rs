//! Coxeter-sortable elements, the Read map and its inverse `S_c`.

mod dihedral;
pub mod polygon;
pub mod svg;

pub use dihedral::sc_dihedral;
pub use polygon::{sc_type_a, sc_type_b, sc_type_d, PolygonModel, RelativePosition};

use crate::absolute::{
    enumerate_nc, initial_simples, kreweras, NoncrossingPartition, StandardCoxeterElement,
};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::system::{CoxeterSystem, Element, Side};
use crate::types::Family;
use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::Arc;

/// The c-sorting word of an element, split into passes through `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortingWord {
    pub letters: Vec<usize>,
    /// End offsets of the blocks; the last one equals `letters.len()`.
    pub block_boundaries: Vec<usize>,
}

impl SortingWord {
    pub fn blocks(&self) -> Vec<&[usize]> {
        let mut start = 0;
        self.block_boundaries
            .iter()
            .map(|&end| {
                let b = &self.letters[start..end];
                start = end;
                b
            })
            .collect()
    }
}

/// Leftmost subword of `c^\infty` that is a reduced word for `w`.
pub fn sorting_word(sys: &CoxeterSystem, c: &StandardCoxeterElement, w: &Element) -> SortingWord {
    let mut rest_inv = w.inverse();
    let mut letters = Vec::with_capacity(w.length());
    let mut block_boundaries = Vec::new();
    while !rest_inv.is_identity() {
        for &s in &c.word {
            // s is a left descent of the remaining element
            if sys.is_right_descent(&rest_inv, s) {
                letters.push(s);
                rest_inv = rest_inv.compose(sys.simple(s));
            }
        }
        block_boundaries.push(letters.len());
    }
    SortingWord {
        letters,
        block_boundaries,
    }
}

/// Whether the block supports of the sorting word are nested decreasing.
pub fn is_sortable(sys: &CoxeterSystem, c: &StandardCoxeterElement, w: &Element) -> bool {
    let sw = sorting_word(sys, c, w);
    let blocks = sw.blocks();
    blocks
        .windows(2)
        .all(|pair| pair[1].iter().all(|s| pair[0].contains(s)))
}

/// Inversions of `w` in the order given by the sorting word, as positive root indices.
pub fn ordered_inversions(
    sys: &CoxeterSystem,
    c: &StandardCoxeterElement,
    w: &Element,
) -> Vec<usize> {
    let mut prefix = sys.identity().clone();
    sorting_word(sys, c, w)
        .letters
        .iter()
        .map(|&s| {
            let r = prefix.apply(s);
            prefix = prefix.compose(sys.simple(s));
            r
        })
        .collect()
}

/// `{ w s w^{-1} : s in D_R(w) }`, ordered by position among the ordered inversions.
pub fn cover_reflections(
    sys: &CoxeterSystem,
    c: &StandardCoxeterElement,
    w: &Element,
) -> Vec<usize> {
    let covers: Vec<usize> = sys
        .descents(w, Side::Right)
        .into_iter()
        .map(|s| w.apply(s) % sys.positive_count())
        .collect();
    ordered_inversions(sys, c, w)
        .into_iter()
        .filter(|r| covers.contains(r))
        .collect()
}

/// The Read map: the ordered product of the cover reflections of a sortable element.
pub fn read_map(
    sys: &CoxeterSystem,
    c: &StandardCoxeterElement,
    w: &Element,
) -> Result<NoncrossingPartition> {
    if !is_sortable(sys, c, w) {
        return Err(Error::NotSortable);
    }
    let covers = cover_reflections(sys, c, w);
    let element = covers.iter().fold(sys.identity().clone(), |acc, &r| {
        acc.compose(&sys.reflections()[r])
    });
    Ok(NoncrossingPartition {
        element,
        coxeter: c.clone(),
        t_length: covers.len(),
    })
}

type Memo = HashMap<(Vec<usize>, usize), Arc<Vec<Element>>>;

/// Sortable elements of the parabolic subgroup on the letters of `word` with length at most `bound`.
fn cambrian(
    sys: &CoxeterSystem,
    word: &[usize],
    bound: usize,
    memo: &mut Memo,
) -> Arc<Vec<Element>> {
    if word.is_empty() || bound == 0 {
        return Arc::new(vec![sys.identity().clone()]);
    }
    let key = (word.to_vec(), bound);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let s = word[0];
    let mut out: Vec<Element> = cambrian(sys, &word[1..], bound, memo).as_ref().clone();
    let mut rotated = word[1..].to_vec();
    rotated.push(s);
    for u in cambrian(sys, &rotated, bound - 1, memo).iter() {
        if !sys.is_left_descent(u, s) {
            out.push(sys.simple(s).compose(u));
        }
    }
    let out = Arc::new(out);
    memo.insert(key, out.clone());
    out
}

/// All c-sortable elements, by length and then ShortLex word.
pub fn sortable_elements(sys: &CoxeterSystem, c: &StandardCoxeterElement) -> Vec<Element> {
    let mut memo = Memo::new();
    let all = cambrian(sys, &c.word, sys.positive_count(), &mut memo);
    let mut keyed: Vec<(Vec<usize>, Element)> = all
        .iter()
        .map(|w| (sys.reduced_word(w), w.clone()))
        .collect();
    keyed.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    keyed.into_iter().map(|(_, w)| w).collect()
}

/// The Read bijection tabulated in both directions.
#[derive(Clone, Debug)]
pub struct CambrianTable {
    pub coxeter: StandardCoxeterElement,
    pub sortables: Vec<Element>,
    inverse: HashMap<Element, Element>,
}

impl CambrianTable {
    pub fn new(sys: &CoxeterSystem, c: &StandardCoxeterElement) -> Result<Self> {
        let sortables = sortable_elements(sys, c);
        let images: Vec<Element> = sortables
            .par_iter()
            .map(|w| read_map(sys, c, w).map(|x| x.element))
            .collect::<Result<_>>()?;
        let mut inverse = HashMap::with_capacity(sortables.len());
        for (w, x) in sortables.iter().zip(images) {
            if inverse.insert(x, w.clone()).is_some() {
                return Err(Error::Normalization(
                    "the Read map is not injective on the enumerated sortables".into(),
                ));
            }
        }
        Ok(Self {
            coxeter: c.clone(),
            sortables,
            inverse,
        })
    }

    /// The sortable preimage of `x`.
    pub fn sc(&self, x: &Element) -> Result<Element> {
        self.inverse.get(x).cloned().ok_or(Error::NotFound)
    }
}

/// `S_c(x)` by searching the sortable elements.
pub fn sc_bruteforce(
    sys: &CoxeterSystem,
    c: &StandardCoxeterElement,
    x: &Element,
) -> Result<Element> {
    CambrianTable::new(sys, c)?.sc(x)
}

/// `S_c(x)`, by the explicit construction where one exists.
pub fn sc(sys: &CoxeterSystem, c: &StandardCoxeterElement, x: &Element) -> Result<Element> {
    if sys.is_full() {
        match sys.ctype().family {
            Family::A => return sc_type_a(sys, c, x),
            Family::B => return sc_type_b(sys, c, x),
            Family::D => return sc_type_d(sys, c, x),
            Family::I2 => return sc_dihedral(sys, c, x),
            _ => {}
        }
    }
    sc_bruteforce(sys, c, x)
}

/// Like [`sc`], but reuses a precomputed table for the types without a construction.
pub fn sc_with(sys: &CoxeterSystem, table: &CambrianTable, x: &Element) -> Result<Element> {
    let c = &table.coxeter;
    if sys.is_full() {
        match sys.ctype().family {
            Family::A => return sc_type_a(sys, c, x),
            Family::B => return sc_type_b(sys, c, x),
            Family::D => return sc_type_d(sys, c, x),
            Family::I2 => return sc_dihedral(sys, c, x),
            _ => {}
        }
    }
    table.sc(x)
}

/// Whether `S_c` has an explicit construction for this system.
pub fn has_explicit_sc(sys: &CoxeterSystem) -> bool {
    sys.is_full()
        && matches!(
            sys.ctype().family,
            Family::A | Family::B | Family::D | Family::I2
        )
}

/// Tests `x^{-1}sx in N(y) <=> x^{-1}sx in N(S_c(y))` and `<=> s not in N(x)` for all
/// `x in NC(W,c)`, `y = x^{-1}c` and initial `s`.
pub fn check_key_lemma(sys: &CoxeterSystem, c: &StandardCoxeterElement) -> Result<Report> {
    let table = CambrianTable::new(sys, c)?;
    let nc = enumerate_nc(sys, c);
    let initial = initial_simples(sys, c);
    let mut report = Report::new(
        "key_lemma",
        sys.ctype().to_string(),
        c.word.iter().map(|&s| sys.label(s)).collect(),
    );
    report.nc_count = nc.len();
    let results: Vec<(usize, Vec<(Vec<i32>, String)>)> = nc
        .par_iter()
        .map(|x| -> Result<_> {
            let y = kreweras(sys, x).element;
            let sy = sc_with(sys, &table, &y)?;
            let x_inv = x.element.inverse();
            let y_inv = y.inverse();
            let sy_inv = sy.inverse();
            let mut bad = Vec::new();
            for &s in &initial {
                let beta = x_inv.apply(s);
                let root = beta % sys.positive_count();
                let in_y = sys.in_inversion_set_of_inverse(&y_inv, root);
                let in_sy = sys.in_inversion_set_of_inverse(&sy_inv, root);
                let s_not_in_x = sys.is_positive(beta);
                if in_y != in_sy {
                    bad.push((
                        sys.word_labels(&x.element),
                        format!(
                            "{}: membership in N(y) and N(S_c(y)) differ",
                            sys.simple_name(s)
                        ),
                    ));
                }
                if in_y != s_not_in_x {
                    bad.push((
                        sys.word_labels(&x.element),
                        format!("{}: reformulation via N(x) fails", sys.simple_name(s)),
                    ));
                }
            }
            Ok((2 * initial.len(), bad))
        })
        .collect::<Result<_>>()?;
    for (n, bad) in results {
        report.checked += n;
        for (x, d) in bad {
            report.push(x, d);
        }
    }
    Ok(report)
}

/// Compares the explicit construction of `S_c` with the search over sortable elements on
/// all of `NC(W, c)`. Types without a construction compare the table with itself.
pub fn check_explicit_sc(sys: &CoxeterSystem, c: &StandardCoxeterElement) -> Result<Report> {
    let table = CambrianTable::new(sys, c)?;
    let nc = enumerate_nc(sys, c);
    let mut report = Report::new(
        "sc",
        sys.ctype().to_string(),
        c.word.iter().map(|&s| sys.label(s)).collect(),
    );
    report.nc_count = nc.len();
    let results: Vec<Option<(Vec<i32>, String)>> = nc
        .par_iter()
        .map(|x| -> Result<_> {
            let explicit = sc(sys, c, &x.element)?;
            let brute = table.sc(&x.element)?;
            Ok((explicit != brute).then(|| {
                (
                    sys.word_labels(&x.element),
                    format!(
                        "explicit S_c gives {:?}, search gives {:?}",
                        sys.word_labels(&explicit),
                        sys.word_labels(&brute)
                    ),
                )
            }))
        })
        .collect::<Result<_>>()?;
    report.checked = results.len();
    for (x, detail) in results.into_iter().flatten() {
        report.push(x, detail);
    }
    Ok(report)
}
