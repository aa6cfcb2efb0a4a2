//! Noncrossing-partition diagrams of the classical types and the explicit
//! inverse of the Read map read off from them.
//!
//! Points sit at integer heights given by their labels (smaller labels are
//! higher), on the right or left half of a convex curve according to the
//! c-labeling. Type D adds the two middle points, kept at their label heights
//! and placed symmetrically inside the region of the centre so that no two
//! polygons meet. Polygons are straight-line convex hulls, and every geometric
//! predicate is evaluated exactly with rational arithmetic.

use crate::absolute::StandardCoxeterElement;
use crate::error::{Error, Result};
use crate::perm;
use crate::system::{CoxeterSystem, Element};
use crate::types::Family;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RelativePosition {
    StrictlyLeft,
    StrictlyRight,
    FullyDisjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ModelKind {
    A,
    B,
    D,
}

/// A rational number with positive denominator, kept in lowest terms.
#[derive(Clone, Copy, Debug)]
struct Frac {
    num: i128,
    den: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Frac {
    fn new(num: i128, den: i128) -> Self {
        let g = gcd(num, den).max(1) * den.signum();
        Frac {
            num: num / g,
            den: den / g,
        }
    }

    fn int(v: i64) -> Self {
        Frac {
            num: v as i128,
            den: 1,
        }
    }

    fn add(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }

    fn neg(self) -> Frac {
        Frac {
            num: -self.num,
            den: self.den,
        }
    }

    fn sub(self, o: Frac) -> Frac {
        self.add(o.neg())
    }

    /// `self * n / d`.
    fn scale(self, n: i64, d: i64) -> Frac {
        Frac::new(self.num * n as i128, self.den * d as i128)
    }

    fn half(self) -> Frac {
        Frac::new(self.num, self.den * 2)
    }

    fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialEq for Frac {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Frac {}
impl PartialOrd for Frac {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Frac {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.num * o.den).cmp(&(o.num * self.den))
    }
}

type Interval = (Frac, Frac);

#[derive(Clone, Debug)]
pub struct PolygonModel {
    pub kind: ModelKind,
    /// Circle labels in clockwise order starting from the top point.
    pub circle: Vec<i32>,
    /// Type D middle points, upper one first.
    pub middle: Vec<i32>,
    pub left: BTreeSet<i32>,
    pub right: BTreeSet<i32>,
    /// Vertex labels of each polygon, increasing.
    pub polygons: Vec<Vec<i32>>,
    /// Index of `-P` for signed models (itself when symmetric).
    negative: Vec<usize>,
    coords: BTreeMap<i32, (Frac, i64)>,
    heights: Vec<i64>,
}

impl PolygonModel {
    fn build(
        kind: ModelKind,
        c_map: impl Fn(i32) -> i32,
        circle_labels: &[i32],
        middle: Vec<i32>,
        polygons: Vec<Vec<i32>>,
    ) -> Result<Self> {
        let top = *circle_labels.iter().min().unwrap();
        let bottom = *circle_labels.iter().max().unwrap();
        let mut right = vec![top];
        let mut x = top;
        while x != bottom {
            x = c_map(x);
            right.push(x);
            if right.len() > circle_labels.len() {
                return Err(Error::Normalization(
                    "Coxeter element is not a single circle".into(),
                ));
            }
        }
        let mut left = vec![bottom];
        while x != top {
            x = c_map(x);
            left.push(x);
            if left.len() > circle_labels.len() {
                return Err(Error::Normalization(
                    "Coxeter element is not a single circle".into(),
                ));
            }
        }
        let mut circle = right.clone();
        circle.extend(&left[1..left.len() - 1]);
        if circle.len() != circle_labels.len() {
            return Err(Error::Normalization(
                "Coxeter element does not visit every point".into(),
            ));
        }
        let yc = -((top + bottom) as i64);
        let half = (bottom - top) as i64;
        let mut coords = BTreeMap::new();
        for &l in &circle {
            let y = -2 * l as i64;
            let side = if l == top || l == bottom {
                0
            } else if right.contains(&l) {
                1
            } else {
                -1
            };
            coords.insert(
                l,
                (Frac::int(side * (half * half - (y - yc) * (y - yc))), y),
            );
        }
        for &l in &middle {
            // a fixed middle point is drawn at the centre, otherwise it is split by height
            coords.insert(l, (Frac::int(0), -2 * l as i64));
        }
        let mut ys: Vec<i64> = coords.values().map(|p| p.1).collect();
        ys.sort_unstable();
        ys.dedup();
        let mut heights = Vec::with_capacity(2 * ys.len());
        for (i, &y) in ys.iter().enumerate() {
            heights.push(y);
            if let Some(&next) = ys.get(i + 1) {
                heights.push((y + next) / 2);
            }
        }
        let negative = match kind {
            ModelKind::A => (0..polygons.len()).collect(),
            _ => {
                let sets: Vec<BTreeSet<i32>> = polygons
                    .iter()
                    .map(|p| p.iter().copied().collect())
                    .collect();
                sets.iter()
                    .map(|p| {
                        let neg: BTreeSet<i32> = p.iter().map(|v| -v).collect();
                        sets.iter().position(|q| *q == neg).ok_or_else(|| {
                            Error::Normalization("polygons are not closed under negation".into())
                        })
                    })
                    .collect::<Result<_>>()?
            }
        };
        let mut model = Self {
            kind,
            circle,
            middle,
            left: left.into_iter().collect(),
            right: right.into_iter().collect(),
            polygons,
            negative,
            coords,
            heights,
        };
        if !model.middle.is_empty() {
            model.place_middle(half);
        }
        Ok(model)
    }

    /// Moves the two middle points horizontally, keeping them at their label heights and
    /// symmetric about the centre, to the position nearest the vertical axis at which
    /// no two polygons meet.
    fn place_middle(&mut self, radius: i64) {
        let (upper, lower) = (self.middle[0], self.middle[1]);
        let h = self.coords[&upper].1;
        let edge = Frac::int(radius * radius - h * h);
        let mut breaks = vec![edge.neg(), edge];
        for (i, a) in self.circle.iter().enumerate() {
            for b in &self.circle[i + 1..] {
                if let Some((x, _)) = self.section(&[*a, *b], h) {
                    if edge.neg() < x && x < edge {
                        breaks.push(x);
                    }
                }
            }
        }
        breaks.sort();
        breaks.dedup();
        let mut candidates: Vec<Frac> = breaks.windows(2).map(|w| w[0].add(w[1]).half()).collect();
        candidates.sort_by_key(|x| (if x.num < 0 { x.neg() } else { *x }, x.num < 0));
        // prefer a point in the region of the centre, then any noncrossing position
        for need_centre in [true, false] {
            for &x in &candidates {
                self.coords.insert(upper, (x, h));
                self.coords.insert(lower, (x.neg(), -h));
                if self.is_noncrossing() && (!need_centre || self.sees_centre(upper)) {
                    return;
                }
            }
        }
        self.coords.insert(upper, (Frac::int(0), h));
        self.coords.insert(lower, (Frac::int(0), -h));
    }

    /// Whether the segment from the centre to `label` avoids every polygon without a middle point.
    fn sees_centre(&self, label: i32) -> bool {
        let seg = [(Frac::int(0), 0), self.coords[&label]];
        self.polygons
            .iter()
            .filter(|p| !p.iter().any(|l| self.middle.contains(l)))
            .all(|p| {
                let pts: Vec<(Frac, i64)> = p.iter().map(|l| self.coords[l]).collect();
                self.separated(&seg, &pts)
            })
    }

    /// Whether two convex hulls are disjoint.
    fn separated(&self, a: &[(Frac, i64)], b: &[(Frac, i64)]) -> bool {
        let mut side = None;
        self.heights.iter().all(|&h| {
            let (Some(ia), Some(ib)) = (section_of(a, h), section_of(b, h)) else {
                return true;
            };
            let s = if ia.1 < ib.0 {
                true
            } else if ib.1 < ia.0 {
                false
            } else {
                return false;
            };
            side.replace(s).is_none_or(|prev| prev == s)
        })
    }

    fn is_noncrossing(&self) -> bool {
        (0..self.polygons.len()).all(|p| {
            (p + 1..self.polygons.len()).all(|q| {
                let mut side = None;
                self.common_heights(&[p, q]).into_iter().all(|h| {
                    let (Some(a), Some(b)) = (self.interval(p, h), self.interval(q, h)) else {
                        return true;
                    };
                    let s = if a.1 < b.0 {
                        true
                    } else if b.1 < a.0 {
                        false
                    } else {
                        return false;
                    };
                    side.replace(s).is_none_or(|prev| prev == s)
                })
            })
        })
    }

    /// Type `A_n` model for `x` in `NC(W, c)`.
    pub fn type_a(sys: &CoxeterSystem, c: &StandardCoxeterElement, x: &Element) -> Result<Self> {
        require(sys, Family::A)?;
        let cp = perm::to_perm(sys, &c.element)?;
        let xp = perm::to_perm(sys, x)?;
        let labels: Vec<i32> = (1..=cp.len() as i32).collect();
        let polygons = orbits(&xp, &labels);
        Self::build(
            ModelKind::A,
            |v| perm::apply(&cp, v),
            &labels,
            vec![],
            polygons,
        )
    }

    /// Type `B_n` model: the half-turn symmetric type `A_{2n-1}` diagram on `{-n..-1, 1..n}`.
    pub fn type_b(sys: &CoxeterSystem, c: &StandardCoxeterElement, x: &Element) -> Result<Self> {
        require(sys, Family::B)?;
        let cp = perm::to_perm(sys, &c.element)?;
        let xp = perm::to_perm(sys, x)?;
        let n = cp.len() as i32;
        let labels: Vec<i32> = (-n..=n).filter(|&v| v != 0).collect();
        let polygons = orbits(&xp, &labels);
        Self::build(
            ModelKind::B,
            |v| perm::apply(&cp, v),
            &labels,
            vec![],
            polygons,
        )
    }

    /// Type `D_n` model with the split middle points `-i1`, `i1`.
    pub fn type_d(sys: &CoxeterSystem, c: &StandardCoxeterElement, x: &Element) -> Result<Self> {
        require(sys, Family::D)?;
        let cp = perm::to_perm(sys, &c.element)?;
        let xp = perm::to_perm(sys, x)?;
        let n = cp.len() as i32;
        let fixed: Vec<i32> = (1..=n).filter(|&v| perm::apply(&cp, v) == -v).collect();
        let [i1] = fixed[..] else {
            return Err(Error::Normalization(format!(
                "expected one balanced 2-cycle in c, found {fixed:?}"
            )));
        };
        let circle: Vec<i32> = (-n..=n).filter(|&v| v != 0 && v.abs() != i1).collect();
        let all: Vec<i32> = (-n..=n).filter(|&v| v != 0).collect();
        let mut polygons = Vec::new();
        let mut symmetric: Vec<i32> = Vec::new();
        let mut balanced = 0;
        for orbit in orbits(&xp, &all) {
            if orbit.contains(&-orbit[0]) {
                balanced += 1;
                symmetric.extend(orbit);
            } else {
                polygons.push(orbit);
            }
        }
        if balanced > 0 {
            if balanced != 2 || !symmetric.contains(&i1) {
                return Err(Error::Normalization(format!(
                    "unexpected balanced cycles in {}",
                    perm::format_cycles(sys, &xp)
                )));
            }
            symmetric.sort_unstable();
            polygons.push(symmetric);
        }
        Self::build(
            ModelKind::D,
            |v| perm::apply(&cp, v),
            &circle,
            vec![-i1, i1],
            polygons,
        )
    }

    /// Model for any classical type.
    pub fn new(sys: &CoxeterSystem, c: &StandardCoxeterElement, x: &Element) -> Result<Self> {
        match sys.ctype().family {
            Family::A => Self::type_a(sys, c, x),
            Family::B => Self::type_b(sys, c, x),
            Family::D => Self::type_d(sys, c, x),
            _ => Err(Error::WrongType {
                expected: "A, B or D",
                got: sys.ctype().to_string(),
            }),
        }
    }

    /// Drawing coordinates of a point (exact internally, rounded here).
    pub fn point(&self, label: i32) -> (f64, f64) {
        let (x, y) = self.coords[&label];
        (x.to_f64(), y as f64)
    }

    /// Every labeled point, circle points first.
    pub fn points(&self) -> Vec<i32> {
        self.circle.iter().chain(&self.middle).copied().collect()
    }

    /// Index of the polygon containing a label.
    pub fn polygon_of(&self, label: i32) -> Option<usize> {
        self.polygons.iter().position(|p| p.contains(&label))
    }

    fn is_symmetric(&self, p: usize) -> bool {
        self.kind != ModelKind::A && self.negative[p] == p
    }

    fn max_label(&self, p: usize) -> i32 {
        *self.polygons[p].last().unwrap()
    }

    fn y_range(&self, p: usize) -> (i64, i64) {
        let ys = self.polygons[p].iter().map(|&l| self.coords[&l].1);
        (ys.clone().min().unwrap(), ys.max().unwrap())
    }

    fn interval(&self, p: usize, h: i64) -> Option<Interval> {
        self.section(&self.polygons[p], h)
    }

    fn section(&self, labels: &[i32], h: i64) -> Option<Interval> {
        let pts: Vec<(Frac, i64)> = labels.iter().map(|l| self.coords[l]).collect();
        section_of(&pts, h)
    }
}

/// Intersection of the convex hull of `pts` with the horizontal line at height `h`.
fn section_of(pts: &[(Frac, i64)], h: i64) -> Option<Interval> {
    {
        let mut lo: Option<Frac> = None;
        let mut hi: Option<Frac> = None;
        let mut add = |x: Frac| {
            lo = Some(lo.map_or(x, |l| l.min(x)));
            hi = Some(hi.map_or(x, |h| h.max(x)));
        };
        for (i, &(xi, yi)) in pts.iter().enumerate() {
            if yi == h {
                add(xi);
            }
            for &(xj, yj) in &pts[i + 1..] {
                if (yi - h).signum() * (yj - h).signum() < 0 {
                    add(xi.add(xj.sub(xi).scale(h - yi, yj - yi)));
                }
            }
        }
        Some((lo?, hi?))
    }
}

impl PolygonModel {
    fn common_heights(&self, ps: &[usize]) -> Vec<i64> {
        let (mut lo, mut hi) = (i64::MIN, i64::MAX);
        for &p in ps {
            let (a, b) = self.y_range(p);
            lo = lo.max(a);
            hi = hi.min(b);
        }
        self.heights
            .iter()
            .copied()
            .filter(|&h| lo <= h && h <= hi)
            .collect()
    }

    /// Position of polygon `p` relative to polygon `q`.
    ///
    /// If the two only touch on every common line, the one whose horizontal sections
    /// have the smaller midpoint is taken to be at the left.
    pub fn relative_position(&self, p: usize, q: usize) -> RelativePosition {
        let heights = self.common_heights(&[p, q]);
        let mut tie = None;
        for &h in &heights {
            let (Some(a), Some(b)) = (self.interval(p, h), self.interval(q, h)) else {
                continue;
            };
            if a.1 < b.0 {
                return RelativePosition::StrictlyLeft;
            }
            if b.1 < a.0 {
                return RelativePosition::StrictlyRight;
            }
            if tie.is_none() {
                match a.0.add(a.1).cmp(&b.0.add(b.1)) {
                    Ordering::Less => tie = Some(RelativePosition::StrictlyLeft),
                    Ordering::Greater => tie = Some(RelativePosition::StrictlyRight),
                    Ordering::Equal => {}
                }
            }
        }
        tie.unwrap_or(RelativePosition::FullyDisjoint)
    }

    fn has_polygon_at_right(&self, p: usize, among: &[usize]) -> bool {
        among
            .iter()
            .any(|&q| q != p && self.relative_position(p, q) == RelativePosition::StrictlyLeft)
    }

    /// The polygon among `among` with nothing strictly at its right and smallest maximum.
    fn select(&self, among: &[usize]) -> Result<usize> {
        among
            .iter()
            .copied()
            .filter(|&p| !self.has_polygon_at_right(p, among))
            .min_by_key(|&p| self.max_label(p))
            .ok_or_else(|| Error::Normalization("every polygon has a polygon at its right".into()))
    }

    /// Whether polygon `r` lies between `a` and `b` on some horizontal line.
    fn between(&self, a: usize, b: usize, r: usize) -> bool {
        self.common_heights(&[a, b, r]).into_iter().any(|h| {
            let (Some(ia), Some(ib), Some(ir)) = (
                self.interval(a, h),
                self.interval(b, h),
                self.interval(r, h),
            ) else {
                return false;
            };
            let gap = if ia.1 < ib.0 {
                (ia.1, ib.0)
            } else if ib.1 < ia.0 {
                (ib.1, ia.0)
            } else {
                return false;
            };
            gap.0 < ir.0 && ir.1 < gap.1
        })
    }

    /// Vertices of `b` lying strictly at the right of polygon `a`.
    fn vertices_right_of(&self, a: usize, b: usize) -> usize {
        self.polygons[b]
            .iter()
            .filter(|&&v| {
                let (x, y) = self.coords[&v];
                self.interval(a, y).is_some_and(|i| x > i.1)
            })
            .count()
    }

    /// The special pair among the remaining polygons, as `(P, -P)` with `P` holding the smallest label.
    fn special_pair(&self, remaining: &[usize]) -> Option<(usize, usize)> {
        let one_small_positive = |p: usize| {
            let pos: Vec<i32> = self.polygons[p]
                .iter()
                .copied()
                .filter(|&v| v > 0)
                .collect();
            pos.len() == 1 && (pos[0] == 1 || pos[0] == 2)
        };
        remaining.iter().copied().find_map(|p| {
            let q = self.negative[p];
            if q == p || p > q || self.polygons[p].len() < 2 {
                return None;
            }
            if !one_small_positive(p) && !one_small_positive(q) {
                return None;
            }
            let (a, b) = if self.polygons[p][0] < self.polygons[q][0] {
                (p, q)
            } else {
                (q, p)
            };
            if remaining
                .iter()
                .any(|&r| r != a && r != b && self.between(a, b, r))
            {
                return None;
            }
            (self.vertices_right_of(a, b) <= 1).then_some((a, b))
        })
    }

    /// The total order on polygons used to build `S_c(x)`.
    pub fn order(&self) -> Result<Vec<usize>> {
        match self.kind {
            ModelKind::A | ModelKind::B => self.order_unsigned(),
            ModelKind::D => self.order_d(),
        }
    }

    fn order_unsigned(&self) -> Result<Vec<usize>> {
        let mut remaining: Vec<usize> = (0..self.polygons.len()).collect();
        let mut out = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            let p = self.select(&remaining)?;
            out.push(p);
            remaining.retain(|&q| q != p);
        }
        Ok(out)
    }

    /// The order `<` on pairs `{P, -P}` and symmetric polygons, each given by its first member.
    pub fn pair_order(&self) -> Result<Vec<usize>> {
        if self.kind != ModelKind::D {
            return Err(Error::WrongType {
                expected: "D",
                got: format!("{:?}", self.kind),
            });
        }
        let mut remaining: Vec<usize> = (0..self.polygons.len()).collect();
        let mut firsts = Vec::new();
        while !remaining.is_empty() {
            let chosen = match self.special_pair(&remaining) {
                None => self.select(&remaining)?,
                Some((p, np)) => {
                    let others_right = remaining.iter().any(|&q| {
                        q != np
                            && q != p
                            && self.relative_position(p, q) == RelativePosition::StrictlyLeft
                    });
                    if others_right {
                        self.select(&remaining)?
                    } else {
                        let rest: Vec<usize> =
                            remaining.iter().copied().filter(|&q| q != np).collect();
                        let q = self.select(&rest)?;
                        if self.max_label(q) < self.max_label(p) {
                            q
                        } else {
                            p
                        }
                    }
                }
            };
            firsts.push(chosen);
            let neg = self.negative[chosen];
            remaining.retain(|&q| q != chosen && q != neg);
        }
        Ok(firsts)
    }

    fn order_d(&self) -> Result<Vec<usize>> {
        let firsts = self.pair_order()?;
        let mut sym = None;
        let mut pairs = Vec::new();
        for &p in &firsts {
            if self.is_symmetric(p) {
                sym = Some(p);
            } else {
                if sym.is_some() {
                    return Err(Error::Normalization(
                        "symmetric polygon is not the last pair".into(),
                    ));
                }
                pairs.push(p);
            }
        }
        let mut out = pairs.clone();
        out.extend(sym);
        out.extend(pairs.iter().rev().map(|&p| self.negative[p]));
        Ok(out)
    }

    /// One-line images of the positions in increasing label order: each polygon's labels
    /// in decreasing order, polygons in the order of [`order`](Self::order).
    pub fn line_notation(&self) -> Result<Vec<i32>> {
        let mut seq = Vec::new();
        for p in self.order()? {
            seq.extend(self.polygons[p].iter().rev());
        }
        Ok(seq)
    }
}

fn require(sys: &CoxeterSystem, family: Family) -> Result<()> {
    if sys.ctype().family != family || !sys.is_full() {
        return Err(Error::WrongType {
            expected: match family {
                Family::A => "A",
                Family::B => "B",
                _ => "D",
            },
            got: sys.ctype().to_string(),
        });
    }
    Ok(())
}

/// Orbits of a (signed) permutation on the given points, each sorted, in order of smallest point.
fn orbits(images: &[i32], points: &[i32]) -> Vec<Vec<i32>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &p in points {
        if seen.contains(&p) {
            continue;
        }
        let mut orbit = vec![p];
        seen.insert(p);
        let mut x = perm::apply(images, p);
        while x != p {
            orbit.push(x);
            seen.insert(x);
            x = perm::apply(images, x);
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Images of the positive points from a line notation over `-n..-1, 1..n`.
fn positive_half(seq: &[i32]) -> Result<Vec<i32>> {
    let n = seq.len() / 2;
    let (neg, pos) = seq.split_at(n);
    if neg.iter().rev().zip(pos).any(|(a, b)| *a != -*b) {
        return Err(Error::Normalization(format!(
            "line notation {seq:?} is not signed"
        )));
    }
    Ok(pos.to_vec())
}

pub fn sc_type_a(sys: &CoxeterSystem, c: &StandardCoxeterElement, x: &Element) -> Result<Element> {
    let model = PolygonModel::type_a(sys, c, x)?;
    perm::from_perm(sys, &model.line_notation()?)
}

/// Type B through the folding into type `A_{2n-1}`.
pub fn sc_type_b(sys: &CoxeterSystem, c: &StandardCoxeterElement, x: &Element) -> Result<Element> {
    let model = PolygonModel::type_b(sys, c, x)?;
    perm::from_perm(sys, &positive_half(&model.line_notation()?)?)
}

pub fn sc_type_d(sys: &CoxeterSystem, c: &StandardCoxeterElement, x: &Element) -> Result<Element> {
    let model = PolygonModel::type_d(sys, c, x)?;
    let mut w = positive_half(&model.line_notation()?)?;
    if w.iter().filter(|&&v| v < 0).count() % 2 == 1 {
        // swap the two centermost entries
        w[0] = -w[0];
    }
    perm::from_perm(sys, &w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::build_system;

    #[test]
    fn type_a_order_example() {
        let s = build_system("A5".parse().unwrap()).unwrap();
        let c = StandardCoxeterElement::parse(&s, "s2 s1 s3 s5 s4").unwrap();
        let x = perm::from_perm(&s, &perm::parse_cycles(&s, "(1,3,6)(2,5)").unwrap()).unwrap();
        let model = PolygonModel::type_a(&s, &c, &x).unwrap();
        let order: Vec<Vec<i32>> = model
            .order()
            .unwrap()
            .into_iter()
            .map(|p| model.polygons[p].iter().rev().copied().collect())
            .collect();
        assert_eq!(order, vec![vec![4], vec![6, 3, 1], vec![5, 2]]);
        let p52 = model.polygon_of(5).unwrap();
        let p4 = model.polygon_of(4).unwrap();
        assert_eq!(
            model.relative_position(p52, p4),
            RelativePosition::StrictlyLeft
        );
        assert_eq!(
            model.relative_position(p4, p52),
            RelativePosition::StrictlyRight
        );
        let y = sc_type_a(&s, &c, &x).unwrap();
        assert_eq!(
            perm::format_cycles(&s, &perm::to_perm(&s, &y).unwrap()),
            "(1,4)(2,6)"
        );
    }

    #[test]
    fn labeling_sides() {
        let s = build_system("A5".parse().unwrap()).unwrap();
        let c = StandardCoxeterElement::parse(&s, "s1 s3 s5 s4 s2").unwrap();
        let model = PolygonModel::type_a(&s, &c, s.identity()).unwrap();
        assert_eq!(model.right, BTreeSet::from([1, 2, 4, 6]));
        assert_eq!(model.left, BTreeSet::from([1, 3, 5, 6]));
        assert_eq!(model.polygons.len(), 6);
    }

    fn d_system(n: usize) -> CoxeterSystem {
        build_system(format!("D{n}").parse().unwrap()).unwrap()
    }

    fn coxeter_from_cycles(s: &CoxeterSystem, text: &str) -> StandardCoxeterElement {
        let w = perm::from_perm(s, &perm::parse_cycles(s, text).unwrap()).unwrap();
        StandardCoxeterElement::from_element(s, &w).unwrap()
    }

    fn element(s: &CoxeterSystem, text: &str) -> Element {
        perm::from_perm(s, &perm::parse_cycles(s, text).unwrap()).unwrap()
    }

    #[test]
    fn type_d_worked_example() {
        let s = d_system(8);
        let c = coxeter_from_cycles(&s, "[-8,-7,-5,-3,-1,4,6][2]");
        let x = element(&s, "((3,-8))((7,5,-2))");
        let model = PolygonModel::type_d(&s, &c, &x).unwrap();
        let pairs: Vec<Vec<i32>> = model
            .pair_order()
            .unwrap()
            .into_iter()
            .map(|p| model.polygons[p].clone())
            .collect();
        assert_eq!(
            pairs,
            vec![vec![-1], vec![4], vec![6], vec![-3, 8], vec![-7, -5, 2]]
        );
        assert_eq!(
            model.line_notation().unwrap(),
            vec![-1, 4, 6, 8, -3, 2, -5, -7, 7, 5, -2, 3, -8, -6, -4, 1]
        );
        let y = sc_type_d(&s, &c, &x).unwrap();
        assert_eq!(perm::to_perm(&s, &y).unwrap(), vec![7, 5, -2, 3, -8, -6, -4, 1]);
    }

    #[test]
    fn type_d_special_pairs() {
        let s = d_system(4);
        let c = coxeter_from_cycles(&s, "[1,-4,-3][2]");
        for text in ["((-4,-3,2))", "((-4,-2,1))"] {
            let x = element(&s, text);
            let model = PolygonModel::type_d(&s, &c, &x).unwrap();
            let first = model.pair_order().unwrap()[1];
            assert!(model.polygons[first].contains(&-4), "{text}");
            let order = model.order().unwrap();
            let p = order.iter().position(|&q| q == first).unwrap();
            let np = order.iter().position(|&q| q == model.negative[first]).unwrap();
            assert!(p < np, "{text}");
        }
    }

    #[test]
    fn type_d_simple_reflections_are_fixed() {
        for n in 4..=6 {
            let s = d_system(n);
            for c in crate::absolute::standard_coxeter_elements(&s) {
                for t in 0..n {
                    let x = s.simple(t);
                    assert_eq!(&sc_type_d(&s, &c, x).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn wrong_family_is_rejected() {
        let s = d_system(4);
        let c = StandardCoxeterElement::parse(&s, "s0 s1 s2 s3").unwrap();
        assert!(matches!(
            sc_type_a(&s, &c, s.identity()),
            Err(Error::WrongType { .. })
        ));
        assert!(matches!(
            sc_type_b(&s, &c, s.identity()),
            Err(Error::WrongType { .. })
        ));
    }
}
