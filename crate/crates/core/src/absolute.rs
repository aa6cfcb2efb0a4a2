//! Absolute order, noncrossing partitions and the Hurwitz action.

use crate::error::{Error, Result};
use crate::system::{CoxeterSystem, Element, Side};
use rayon::prelude::*;
use std::collections::{BTreeSet, HashSet, VecDeque};

/// Default bound on Hurwitz orbit sizes.
pub const HURWITZ_CAP: usize = 1_000_000;

/// A product of all simple generators in some order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardCoxeterElement {
    pub element: Element,
    pub word: Vec<usize>,
}

impl StandardCoxeterElement {
    /// Validates that `word` uses every simple index exactly once.
    pub fn new(sys: &CoxeterSystem, word: Vec<usize>) -> Result<Self> {
        let mut sorted = word.clone();
        sorted.sort_unstable();
        if sorted != (0..sys.rank()).collect::<Vec<_>>() {
            return Err(Error::NotCoxeterWord(sys.format_word(&word)));
        }
        Ok(Self {
            element: sys.word_element(&word),
            word,
        })
    }

    /// Parse `s1,s2,s3` (or space separated) into a standard Coxeter element.
    pub fn parse(sys: &CoxeterSystem, text: &str) -> Result<Self> {
        Self::new(sys, sys.parse_word(text)?)
    }

    /// The standard Coxeter element equal to `w`, with its ShortLex word.
    pub fn from_element(sys: &CoxeterSystem, w: &Element) -> Result<Self> {
        Self::new(sys, sys.reduced_word(w))
    }

    /// `s c s` where `s` is the first letter of the word.
    pub fn rotate(&self, sys: &CoxeterSystem) -> Self {
        let mut word = self.word.clone();
        word.rotate_left(1);
        Self {
            element: sys.word_element(&word),
            word,
        }
    }

    /// Move an initial simple `s` to the end of the word (`scs`), keeping a valid word.
    pub fn conjugate_initial(&self, sys: &CoxeterSystem, s: usize) -> Result<Self> {
        let pos = self
            .word
            .iter()
            .position(|&t| t == s)
            .ok_or_else(|| Error::NotCoxeterWord(sys.format_word(&self.word)))?;
        // s can be moved to the front iff it commutes with all earlier letters
        if self.word[..pos]
            .iter()
            .any(|&t| sys.coxeter_matrix()[s][t] != 2)
        {
            return Err(Error::NotCoxeterWord(format!(
                "{} is not initial in {}",
                sys.simple_name(s),
                sys.format_word(&self.word)
            )));
        }
        let mut word = self.word.clone();
        word.remove(pos);
        word.push(s);
        Self::new(sys, word)
    }
}

/// An element `x` below a standard Coxeter element in absolute order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NoncrossingPartition {
    pub element: Element,
    pub coxeter: StandardCoxeterElement,
    pub t_length: usize,
}

impl NoncrossingPartition {
    /// Checks `x <=_T c`.
    pub fn new(
        sys: &CoxeterSystem,
        element: Element,
        coxeter: &StandardCoxeterElement,
    ) -> Result<Self> {
        if !leq_t(sys, &element, &coxeter.element) {
            return Err(Error::NotBelowCoxeter);
        }
        Ok(Self {
            t_length: reflection_length(sys, &element),
            element,
            coxeter: coxeter.clone(),
        })
    }
}

/// A tuple of reflections, each given by its positive root index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TWord {
    pub tuple: Vec<usize>,
}

impl TWord {
    pub fn product(&self, sys: &CoxeterSystem) -> Element {
        self.tuple.iter().fold(sys.identity().clone(), |acc, &r| {
            acc.compose(&sys.reflections()[r])
        })
    }

    /// Carter's criterion: the roots are linearly independent.
    pub fn is_reduced(&self, sys: &CoxeterSystem) -> bool {
        sys.roots_rank(&self.tuple) == self.tuple.len()
    }
}

pub fn reflection_length(sys: &CoxeterSystem, w: &Element) -> usize {
    sys.reflection_length(w)
}

/// `u <=_T v` iff `l_T(u) + l_T(u^{-1} v) = l_T(v)`.
pub fn leq_t(sys: &CoxeterSystem, u: &Element, v: &Element) -> bool {
    let quotient = u.inverse().compose(v);
    sys.reflection_length(u) + sys.reflection_length(&quotient) == sys.reflection_length(v)
}

/// All of `NC(W, c)`, sorted by reflection length and then by ShortLex word.
pub fn enumerate_nc(sys: &CoxeterSystem, c: &StandardCoxeterElement) -> Vec<NoncrossingPartition> {
    let mut found: HashSet<Element> = HashSet::new();
    found.insert(c.element.clone());
    let mut level = vec![c.element.clone()];
    let mut all = vec![(sys.rank(), c.element.clone())];
    let mut lt = sys.rank();
    while lt > 0 {
        let next: Vec<Element> = level
            .par_iter()
            .flat_map_iter(|x| {
                sys.reflections()
                    .iter()
                    .map(move |t| x.compose(t))
                    .filter(|xt| sys.reflection_length(xt) + 1 == lt)
                    .collect::<Vec<_>>()
            })
            .collect();
        lt -= 1;
        level.clear();
        for x in next {
            if found.insert(x.clone()) {
                level.push(x.clone());
                all.push((lt, x));
            }
        }
    }
    let mut keyed: Vec<(usize, Vec<usize>, Element)> = all
        .into_iter()
        .map(|(l, x)| (l, sys.reduced_word(&x), x))
        .collect();
    keyed.sort_by(|a, b| (a.0, a.1.len(), &a.1).cmp(&(b.0, b.1.len(), &b.1)));
    keyed
        .into_iter()
        .map(|(l, _, x)| NoncrossingPartition {
            element: x,
            coxeter: c.clone(),
            t_length: l,
        })
        .collect()
}

/// Right Kreweras complement `x^{-1} c`.
pub fn kreweras(sys: &CoxeterSystem, x: &NoncrossingPartition) -> NoncrossingPartition {
    let y = x.element.inverse().compose(&x.coxeter.element);
    NoncrossingPartition {
        t_length: sys.rank() - x.t_length,
        element: y,
        coxeter: x.coxeter.clone(),
    }
}

/// Greedy T-reduced word: the first reflection `t` in root order with `l_T(tx) < l_T(x)`, then recurse.
pub fn t_reduced_word(sys: &CoxeterSystem, x: &Element) -> TWord {
    let mut tuple = Vec::new();
    let mut rest = x.clone();
    let mut lt = sys.reflection_length(&rest);
    while lt > 0 {
        let (r, next) = sys
            .reflections()
            .iter()
            .enumerate()
            .map(|(r, t)| (r, t.compose(&rest)))
            .find(|(_, tx)| sys.reflection_length(tx) < lt)
            .expect("a nontrivial element has a reflection below it");
        tuple.push(r);
        rest = next;
        lt -= 1;
    }
    TWord { tuple }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

/// Hurwitz move at 1-based position `i`: right sends `(a, b)` to `(aba, a)`, left is its inverse.
pub fn hurwitz_step(
    sys: &CoxeterSystem,
    w: &TWord,
    i: usize,
    direction: Direction,
) -> Result<TWord> {
    if i == 0 || i >= w.tuple.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: w.tuple.len(),
        });
    }
    let (a, b) = (w.tuple[i - 1], w.tuple[i]);
    let mut tuple = w.tuple.clone();
    match direction {
        Direction::Right => {
            tuple[i - 1] = sys.conjugate_reflection(&sys.reflections()[a], b);
            tuple[i] = a;
        }
        Direction::Left => {
            tuple[i - 1] = b;
            tuple[i] = sys.conjugate_reflection(&sys.reflections()[b], a);
        }
    }
    Ok(TWord { tuple })
}

/// Closure of a T-word under Hurwitz moves, sorted.
pub fn hurwitz_orbit(sys: &CoxeterSystem, w: &TWord, cap: usize) -> Result<Vec<TWord>> {
    let mut seen: BTreeSet<TWord> = BTreeSet::new();
    seen.insert(w.clone());
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(cur) = queue.pop_front() {
        for i in 1..cur.tuple.len() {
            for dir in [Direction::Left, Direction::Right] {
                let next = hurwitz_step(sys, &cur, i, dir)?;
                if !seen.contains(&next) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Distinct standard Coxeter elements, each with its lexicographically first word.
pub fn standard_coxeter_elements(sys: &CoxeterSystem) -> Vec<StandardCoxeterElement> {
    let n = sys.rank();
    let mut seen: HashSet<Element> = HashSet::new();
    let mut out = Vec::new();
    let mut word: Vec<usize> = (0..n).collect();
    loop {
        let c = sys.word_element(&word);
        if seen.insert(c.clone()) {
            out.push(StandardCoxeterElement {
                element: c,
                word: word.clone(),
            });
        }
        if !next_permutation(&mut word) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Simples that start some reduced word of `c`: its left descents.
pub fn initial_simples(sys: &CoxeterSystem, c: &StandardCoxeterElement) -> Vec<usize> {
    sys.descents(&c.element, Side::Left)
}
