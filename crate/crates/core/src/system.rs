//! Finite Coxeter systems realized on their root systems.
//!
//! Root coordinates are computed exactly over a [`CoefficientRing`]; once the
//! root system is closed, group elements are stored as permutations of root
//! indices and no ring arithmetic is needed for multiplication, lengths or
//! descents. Linear algebra (fixed spaces, Carter's criterion) goes through
//! the `Z`-expansion of every root, so it is exact as well.

use crate::error::{Error, Result};
use crate::scalar::{integer_rank, CoefficientRing, IntegerRing, RealCyclotomicRing};
use crate::types::{CoxeterType, Family};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

/// A group element, as the permutation it induces on root indices.
///
/// Positive roots have indices `0..N`, and `i + N` is the index of `-root_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    perm: Box<[u16]>,
}

impl Element {
    pub fn identity(root_count: usize) -> Self {
        Self {
            perm: (0..root_count as u16).collect(),
        }
    }

    /// The permutation of root indices, `2N` entries.
    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    /// Image of the root with index `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.perm[i] as usize
    }

    /// `self * other`: apply `other` first.
    pub fn compose(&self, other: &Element) -> Element {
        Element {
            perm: other.perm.iter().map(|&i| self.perm[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Element {
        let mut inv = vec![0u16; self.perm.len()];
        for (i, &j) in self.perm.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Element { perm: inv.into() }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    fn npos(&self) -> usize {
        self.perm.len() / 2
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let n = self.npos();
        self.perm[..n].iter().filter(|&&j| j as usize >= n).count()
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.npos();
        write!(f, "Element{:?}", &self.perm[..n])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// A reflection, identified by its positive root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Reflection {
    pub root_index: usize,
    pub element: Element,
}

/// Which ring the Cartan data lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingKind {
    Integers,
    /// `Z[2cos(pi/m)]`
    RealCyclotomic(u32),
}

/// Cartan matrix in power-basis coordinates: `s_i(a_j) = a_j - cartan[i][j] a_i`.
#[derive(Clone, Debug)]
pub struct CartanData {
    pub ring: RingKind,
    pub entries: Vec<Vec<Vec<i64>>>,
}

/// Positive roots of a finite root system over an exact ring.
pub struct RootSystem<R: CoefficientRing> {
    pub ring: R,
    pub cartan: Vec<Vec<R::Elem>>,
    /// Positive roots in simple-root coordinates, simple roots first, then BFS order.
    pub positive: Vec<Vec<R::Elem>>,
    /// `simple_images[i][r]`: index (in `0..2N`) of `s_i(root_r)` for positive `r`.
    pub simple_images: Vec<Vec<usize>>,
    /// For non-simple roots, `(i, p)` with `root = s_i(root_p)`.
    pub parent: Vec<Option<(usize, usize)>>,
}

const ROOT_CAP: usize = 20_000;

impl<R: CoefficientRing> RootSystem<R> {
    pub fn generate(ring: R, cartan: Vec<Vec<R::Elem>>) -> Result<Self> {
        let n = cartan.len();
        let reflect = |i: usize, beta: &[R::Elem]| -> Vec<R::Elem> {
            let mut pairing = ring.zero();
            for (j, b) in beta.iter().enumerate() {
                pairing = ring.add(&pairing, &ring.mul(b, &cartan[i][j]));
            }
            let mut out = beta.to_vec();
            out[i] = ring.sub(&out[i], &pairing);
            out
        };
        let mut positive: Vec<Vec<R::Elem>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { ring.one() } else { ring.zero() })
                    .collect()
            })
            .collect();
        let mut index: HashMap<Vec<R::Elem>, usize> = positive
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        let mut parent = vec![None; n];
        let mut queue: VecDeque<usize> = (0..n).collect();
        while let Some(r) = queue.pop_front() {
            // children in simple order, ties broken by coordinates
            let mut fresh = Vec::new();
            for i in 0..n {
                if r == i {
                    continue;
                }
                let img = reflect(i, &positive[r]);
                if !index.contains_key(&img) && !fresh.iter().any(|(_, v)| *v == img) {
                    fresh.push((i, img));
                }
            }
            for (i, img) in fresh {
                let k = positive.len();
                index.insert(img.clone(), k);
                positive.push(img);
                parent.push(Some((i, r)));
                queue.push_back(k);
                if positive.len() > ROOT_CAP {
                    return Err(Error::UnsupportedType(
                        "Cartan data does not define a finite root system".into(),
                    ));
                }
            }
        }
        let npos = positive.len();
        let mut simple_images = vec![vec![0; npos]; n];
        for i in 0..n {
            for r in 0..npos {
                simple_images[i][r] = if r == i {
                    i + npos
                } else {
                    let img = reflect(i, &positive[r]);
                    *index
                        .get(&img)
                        .expect("simple reflection must permute the other positive roots")
                };
            }
        }
        Ok(Self {
            ring,
            cartan,
            positive,
            simple_images,
            parent,
        })
    }

    /// Coordinates of `g^j * root_r` in the `Z`-basis `{g^l a_k}`, flattened as `k * d + l`.
    pub fn z_expansions(&self) -> Vec<Vec<Vec<i64>>> {
        let d = self.ring.degree();
        let g = self.ring.generator();
        self.positive
            .iter()
            .map(|root| {
                let mut scaled: Vec<R::Elem> = root.clone();
                (0..d)
                    .map(|j| {
                        if j > 0 {
                            scaled = scaled.iter().map(|c| self.ring.mul(c, &g)).collect();
                        }
                        scaled.iter().flat_map(|c| self.ring.coords(c)).collect()
                    })
                    .collect()
            })
            .collect()
    }
}

/// An immutable finite Coxeter system with its root-permutation tables.
#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    ctype: CoxeterType,
    /// Indices in the parent system when this is a standard parabolic subsystem.
    subset: Option<Vec<usize>>,
    labels: Vec<i32>,
    cartan: CartanData,
    coxeter_matrix: Vec<Vec<u32>>,
    npos: usize,
    degree: usize,
    root_coords: Vec<Vec<Vec<i64>>>,
    z_expansion: Vec<Vec<Vec<i64>>>,
    simples: Vec<Element>,
    reflections: Vec<Element>,
    w0: Element,
    identity: Element,
}

fn int_entry(x: i64) -> Vec<i64> {
    vec![x]
}

/// Cartan data for an irreducible type, with the simple labels used for display.
fn cartan_for(ctype: &CoxeterType) -> (CartanData, Vec<i32>) {
    let n = ctype.rank;
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    let labels: Vec<i32>;
    match ctype.family {
        Family::A => {
            labels = (1..=n as i32).collect();
            edges.extend((0..n - 1).map(|i| (i, i + 1, 3)));
        }
        Family::B => {
            // t0 = (1,-1), t_i = (i,i+1)(-i,-i-1)
            labels = (0..n as i32).collect();
            edges.push((0, 1, 4));
            edges.extend((1..n - 1).map(|i| (i, i + 1, 3)));
        }
        Family::D => {
            // s0 = (1,-2)(-1,2), s_i = (i,i+1)(-i,-i-1)
            labels = (0..n as i32).collect();
            edges.push((0, 2, 3));
            edges.extend((1..n - 1).map(|i| (i, i + 1, 3)));
        }
        Family::I2 => {
            labels = vec![1, 2];
            edges.push((0, 1, ctype.m.unwrap()));
        }
        Family::H => {
            labels = (1..=n as i32).collect();
            edges.push((0, 1, 5));
            edges.extend((1..n - 1).map(|i| (i, i + 1, 3)));
        }
        Family::F => {
            labels = vec![1, 2, 3, 4];
            edges.extend([(0, 1, 3), (1, 2, 4), (2, 3, 3)]);
        }
        Family::E => {
            labels = (1..=n as i32).collect();
            // Bourbaki: 1-3-4-5-6(-7-8), 2-4
            edges.extend([(0, 2, 3), (2, 3, 3), (1, 3, 3)]);
            edges.extend((3..n - 1).map(|i| (i, i + 1, 3)));
        }
    }
    let ring = match ctype.family {
        Family::I2 => RingKind::RealCyclotomic(ctype.m.unwrap()),
        Family::H => RingKind::RealCyclotomic(5),
        _ => RingKind::Integers,
    };
    let zero = |ring: RingKind| match ring {
        RingKind::Integers => int_entry(0),
        RingKind::RealCyclotomic(m) => {
            vec![0; crate::scalar::min_poly_two_cos(m).len() - 1]
        }
    };
    let mut entries = vec![vec![zero(ring); n]; n];
    for (i, row) in entries.iter_mut().enumerate() {
        let mut two = zero(ring);
        two[0] = 2;
        row[i] = two;
    }
    for &(i, j, m) in &edges {
        match ring {
            RingKind::Integers => {
                let (a, b) = match m {
                    3 => (-1, -1),
                    4 => (-1, -2),
                    6 => (-1, -3),
                    _ => unreachable!("crystallographic edge label"),
                };
                entries[i][j] = int_entry(a);
                entries[j][i] = int_entry(b);
            }
            RingKind::RealCyclotomic(mm) => {
                // -2cos(pi/m) in Z[2cos(pi/mm)]
                let mut e = zero(ring);
                if m == 3 {
                    e[0] = -1;
                } else {
                    assert_eq!(m, mm, "edge label must match the ring");
                    e[1] = -1;
                }
                entries[i][j] = e.clone();
                entries[j][i] = e;
            }
        }
    }
    (CartanData { ring, entries }, labels)
}

struct Built {
    npos: usize,
    degree: usize,
    simple_images: Vec<Vec<usize>>,
    parent: Vec<Option<(usize, usize)>>,
    root_coords: Vec<Vec<Vec<i64>>>,
    z_expansion: Vec<Vec<Vec<i64>>>,
}

fn build_generic<R: CoefficientRing>(ring: R, data: &CartanData) -> Result<Built> {
    let cartan: Vec<Vec<R::Elem>> = data
        .entries
        .iter()
        .map(|row| row.iter().map(|c| ring.from_coords(c)).collect())
        .collect();
    let rs = RootSystem::generate(ring, cartan)?;
    let root_coords = rs
        .positive
        .iter()
        .map(|r| r.iter().map(|c| rs.ring.coords(c)).collect())
        .collect();
    Ok(Built {
        npos: rs.positive.len(),
        degree: rs.ring.degree(),
        z_expansion: rs.z_expansions(),
        simple_images: rs.simple_images,
        parent: rs.parent,
        root_coords,
    })
}

/// Construct the Coxeter system of an irreducible finite type.
pub fn build_system(ctype: CoxeterType) -> Result<CoxeterSystem> {
    let (cartan, labels) = cartan_for(&ctype);
    CoxeterSystem::from_cartan(ctype, None, labels, cartan)
}

impl CoxeterSystem {
    fn from_cartan(
        ctype: CoxeterType,
        subset: Option<Vec<usize>>,
        labels: Vec<i32>,
        cartan: CartanData,
    ) -> Result<Self> {
        let built = match cartan.ring {
            RingKind::Integers => build_generic(IntegerRing::<i64>::new(), &cartan)?,
            RingKind::RealCyclotomic(m) => {
                build_generic(RealCyclotomicRing::<i64>::new(m), &cartan)?
            }
        };
        let n = cartan.entries.len();
        let npos = built.npos;
        let total = 2 * npos;
        let simples: Vec<Element> = (0..n)
            .map(|i| {
                let mut perm = vec![0u16; total];
                for r in 0..npos {
                    let img = built.simple_images[i][r];
                    perm[r] = img as u16;
                    perm[r + npos] = ((img + npos) % total) as u16;
                }
                Element { perm: perm.into() }
            })
            .collect();
        let mut reflections: Vec<Element> = Vec::with_capacity(npos);
        for r in 0..npos {
            let t = match built.parent[r] {
                None => simples[r].clone(),
                Some((i, p)) => simples[i].compose(&reflections[p]).compose(&simples[i]),
            };
            reflections.push(t);
        }
        let identity = Element::identity(total);
        let mut coxeter_matrix = vec![vec![1u32; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let st = simples[i].compose(&simples[j]);
                    let mut acc = st.clone();
                    let mut order = 1;
                    while !acc.is_identity() {
                        acc = acc.compose(&st);
                        order += 1;
                    }
                    coxeter_matrix[i][j] = order;
                }
            }
        }
        // longest element: apply descents until every positive root is inverted
        let mut w0 = identity.clone();
        loop {
            let Some(i) = (0..n).find(|&i| (w0.apply(i)) < npos) else {
                break;
            };
            w0 = w0.compose(&simples[i]);
        }
        Ok(Self {
            ctype,
            subset,
            labels,
            cartan,
            coxeter_matrix,
            npos,
            degree: built.degree,
            root_coords: built.root_coords,
            z_expansion: built.z_expansion,
            simples,
            reflections,
            w0,
            identity,
        })
    }

    /// The standard parabolic subsystem on the given simple indices (kept in increasing order).
    pub fn parabolic(&self, subset: &[usize]) -> Result<CoxeterSystem> {
        let mut idx = subset.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let entries = idx
            .iter()
            .map(|&i| {
                idx.iter()
                    .map(|&j| self.cartan.entries[i][j].clone())
                    .collect()
            })
            .collect();
        let cartan = CartanData {
            ring: self.cartan.ring,
            entries,
        };
        let labels = idx.iter().map(|&i| self.labels[i]).collect();
        let parent_idx = match &self.subset {
            Some(outer) => idx.iter().map(|&i| outer[i]).collect(),
            None => idx.clone(),
        };
        CoxeterSystem::from_cartan(self.ctype, Some(parent_idx), labels, cartan)
    }

    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }

    /// True for a full irreducible system (not a proper parabolic).
    pub fn is_full(&self) -> bool {
        self.subset.is_none()
    }

    /// For a parabolic subsystem, the parent indices of its simples.
    pub fn parent_indices(&self) -> Option<&[usize]> {
        self.subset.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn positive_count(&self) -> usize {
        self.npos
    }

    pub fn root_count(&self) -> usize {
        2 * self.npos
    }

    /// Rank of the coefficient ring over `Z`.
    pub fn ring_degree(&self) -> usize {
        self.degree
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter_matrix
    }

    pub fn labels(&self) -> &[i32] {
        &self.labels
    }

    pub fn label(&self, s: usize) -> i32 {
        self.labels[s]
    }

    pub fn simple_name(&self, s: usize) -> String {
        format!("s{}", self.labels[s])
    }

    /// Simple index carrying the given display label.
    pub fn index_of_label(&self, label: i32) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Positive root coordinates in the simple-root basis, each entry in power-basis form.
    pub fn root_coords(&self, r: usize) -> &[Vec<i64>] {
        &self.root_coords[r % self.npos]
    }

    #[inline]
    pub fn neg(&self, i: usize) -> usize {
        (i + self.npos) % (2 * self.npos)
    }

    #[inline]
    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    pub fn identity(&self) -> &Element {
        &self.identity
    }

    pub fn longest(&self) -> &Element {
        &self.w0
    }

    pub fn simple(&self, s: usize) -> &Element {
        &self.simples[s]
    }

    pub fn simples(&self) -> &[Element] {
        &self.simples
    }

    /// All reflections, indexed by positive root.
    pub fn reflections(&self) -> &[Element] {
        &self.reflections
    }

    pub fn reflection(&self, root_index: usize) -> Reflection {
        let r = root_index % self.npos;
        Reflection {
            root_index: r,
            element: self.reflections[r].clone(),
        }
    }

    /// Root index of a reflection element, if it is one.
    pub fn reflection_index(&self, t: &Element) -> Option<usize> {
        // a reflection fixes all but the roots it negates; look at its inverted roots
        if t.length().is_multiple_of(2) {
            return None;
        }
        let candidates = (0..self.npos).filter(|&r| t.apply(r) == r + self.npos);
        let mut found = None;
        for r in candidates {
            if self.reflections[r] == *t {
                found = Some(r);
                break;
            }
        }
        found
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        a.compose(b)
    }

    /// Product of a word of simple indices.
    pub fn word_element(&self, word: &[usize]) -> Element {
        let mut w = self.identity.clone();
        for &s in word {
            w = w.compose(&self.simples[s]);
        }
        w
    }

    pub fn length(&self, w: &Element) -> usize {
        w.length()
    }

    /// Whether `ws < w`.
    pub fn is_right_descent(&self, w: &Element, s: usize) -> bool {
        w.apply(s) >= self.npos
    }

    /// Whether `sw < w`, i.e. `w^{-1}(a_s) < 0`.
    pub fn is_left_descent(&self, w: &Element, s: usize) -> bool {
        let pos = w.perm().iter().position(|&j| j as usize == s).unwrap();
        pos >= self.npos
    }

    pub fn descents(&self, w: &Element, side: Side) -> Vec<usize> {
        match side {
            Side::Right => (0..self.rank())
                .filter(|&s| self.is_right_descent(w, s))
                .collect(),
            Side::Left => {
                let inv = w.inverse();
                (0..self.rank())
                    .filter(|&s| self.is_right_descent(&inv, s))
                    .collect()
            }
        }
    }

    /// Left inversion set `N(w) = { t : l(tw) < l(w) }`, as sorted positive root indices.
    pub fn inversion_set(&self, w: &Element) -> Vec<usize> {
        let inv = w.inverse();
        (0..self.npos)
            .filter(|&r| inv.apply(r) >= self.npos)
            .collect()
    }

    /// Whether the reflection with positive root `r` lies in `N(w)`, given `w^{-1}`.
    #[inline]
    pub fn in_inversion_set_of_inverse(&self, w_inv: &Element, r: usize) -> bool {
        w_inv.apply(r) >= self.npos
    }

    /// ShortLex-minimal reduced word: repeatedly strip the smallest left descent.
    pub fn reduced_word(&self, w: &Element) -> Vec<usize> {
        let mut word = Vec::with_capacity(w.length());
        let mut rest = w.inverse();
        // left descents of w are right descents of w^{-1}
        while let Some(s) = (0..self.rank()).find(|&s| self.is_right_descent(&rest, s)) {
            word.push(s);
            rest = rest.compose(&self.simples[s]);
        }
        word
    }

    /// Conjugate `w t w^{-1}` of the reflection with positive root `r`, as a root index.
    pub fn conjugate_reflection(&self, w: &Element, r: usize) -> usize {
        w.apply(r) % self.npos
    }

    /// Enumerate the whole group in BFS order (by length, then discovery).
    pub fn elements(&self) -> Vec<Element> {
        let mut seen: HashSet<Element> = HashSet::new();
        let mut out = vec![self.identity.clone()];
        seen.insert(self.identity.clone());
        let mut head = 0;
        while head < out.len() {
            let w = out[head].clone();
            head += 1;
            for s in 0..self.rank() {
                if !self.is_right_descent(&w, s) {
                    let ws = w.compose(&self.simples[s]);
                    if seen.insert(ws.clone()) {
                        out.push(ws);
                    }
                }
            }
        }
        out
    }

    /// Reflection length: codimension of the fixed space of `w`.
    pub fn reflection_length(&self, w: &Element) -> usize {
        let d = self.degree;
        let n = self.rank();
        let dim = n * d;
        // column (s, j) is g^j w(a_s) - g^j a_s, stored as rows of the transpose
        let mut rows: Vec<Vec<i128>> = Vec::with_capacity(dim);
        for s in 0..n {
            let img = w.apply(s);
            let (r, sign) = if img < self.npos {
                (img, 1i128)
            } else {
                (img - self.npos, -1i128)
            };
            for j in 0..d {
                let mut row: Vec<i128> = self.z_expansion[r][j]
                    .iter()
                    .map(|&x| sign * x as i128)
                    .collect();
                for (k, v) in self.z_expansion[s][j].iter().enumerate() {
                    row[k] -= *v as i128;
                }
                rows.push(row);
            }
        }
        let rank = integer_rank(rows);
        debug_assert_eq!(rank % d, 0);
        rank / d
    }

    /// Rank over the coefficient field of the given roots (Carter's criterion).
    pub fn roots_rank(&self, roots: &[usize]) -> usize {
        let d = self.degree;
        let rows: Vec<Vec<i128>> = roots
            .iter()
            .flat_map(|&r| {
                let r = r % self.npos;
                (0..d).map(move |j| self.z_expansion[r][j].iter().map(|&x| x as i128).collect())
            })
            .collect();
        integer_rank(rows) / d
    }

    /// Map an element of this (parabolic) system into the parent system.
    pub fn embed_into(&self, parent: &CoxeterSystem, w: &Element) -> Element {
        let word: Vec<usize> = match &self.subset {
            Some(idx) => self.reduced_word(w).into_iter().map(|s| idx[s]).collect(),
            None => self.reduced_word(w),
        };
        parent.word_element(&word)
    }

    /// Restrict an element of the parent lying in this parabolic subgroup; `None` otherwise.
    pub fn restrict_from(&self, parent: &CoxeterSystem, w: &Element) -> Option<Element> {
        let idx = self.subset.as_ref()?;
        let mut word = Vec::new();
        for s in parent.reduced_word(w) {
            word.push(idx.iter().position(|&i| i == s)?);
        }
        Some(self.word_element(&word))
    }

    /// Parse a word like `s1 s2 s1` or `s1,s2` into simple indices.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()) {
            let tok = tok.trim();
            if tok.is_empty() || tok == "e" {
                continue;
            }
            let num = tok
                .strip_prefix('s')
                .or_else(|| tok.strip_prefix('t'))
                .unwrap_or(tok);
            let label: i32 = num
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator {tok:?}")))?;
            out.push(
                self.index_of_label(label)
                    .ok_or_else(|| Error::Parse(format!("no generator with label {label}")))?,
            );
        }
        Ok(out)
    }

    pub fn format_word(&self, word: &[usize]) -> String {
        word.iter()
            .map(|&s| self.simple_name(s))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Reduced word as display labels, the serialization of an element.
    pub fn word_labels(&self, w: &Element) -> Vec<i32> {
        self.reduced_word(w)
            .into_iter()
            .map(|s| self.labels[s])
            .collect()
    }

    /// Inverse of [`word_labels`](Self::word_labels).
    pub fn element_from_labels(&self, labels: &[i32]) -> Result<Element> {
        let word = labels
            .iter()
            .map(|&l| {
                self.index_of_label(l)
                    .ok_or_else(|| Error::Parse(format!("no generator with label {l}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.word_element(&word))
    }
}
