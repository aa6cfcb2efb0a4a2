use super::braid::{delta, positive_lift, BraidWord};
use crate::system::{CoxeterSystem, Element};
use serde::{Deserialize, Serialize};

/// Left normal form `Delta^delta * u_1 ... u_l` with simple factors `e != u_i != w0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideNF {
    pub delta: i64,
    pub factors: Vec<Element>,
}

/// JSON form `{"delta": k, "factors": [[labels...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GarsideJson {
    pub delta: i64,
    pub factors: Vec<Vec<i32>>,
}

impl GarsideNF {
    pub fn identity() -> Self {
        Self {
            delta: 0,
            factors: Vec::new(),
        }
    }

    /// Number of simple factors after the Delta power.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// A braid word representing this normal form.
    pub fn to_braid(&self, sys: &CoxeterSystem) -> BraidWord {
        let d = delta(sys);
        let mut out = BraidWord::new();
        let power = if self.delta >= 0 { d } else { d.inverse() };
        for _ in 0..self.delta.unsigned_abs() {
            out = out.concat(&power);
        }
        for f in &self.factors {
            out = out.concat(&positive_lift(sys, f));
        }
        out
    }

    /// Image in the Coxeter group.
    pub fn project(&self, sys: &CoxeterSystem) -> Element {
        let mut w = if self.delta % 2 == 0 {
            sys.identity().clone()
        } else {
            sys.longest().clone()
        };
        for f in &self.factors {
            w = w.compose(f);
        }
        w
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> GarsideJson {
        GarsideJson {
            delta: self.delta,
            factors: self.factors.iter().map(|f| sys.word_labels(f)).collect(),
        }
    }

    pub fn format(&self, sys: &CoxeterSystem) -> String {
        let mut parts = Vec::new();
        if self.delta != 0 {
            parts.push(format!("D^{}", self.delta));
        }
        for f in &self.factors {
            let w: Vec<String> = sys.word_labels(f).iter().map(|l| l.to_string()).collect();
            parts.push(format!("[{}]", w.join(" ")));
        }
        if parts.is_empty() {
            "e".to_string()
        } else {
            parts.join(" ")
        }
    }
}

/// Incremental left normal form computation.
struct Normalizer<'a> {
    sys: &'a CoxeterSystem,
    delta: i64,
    factors: Vec<Element>,
}

impl<'a> Normalizer<'a> {
    fn new(sys: &'a CoxeterSystem) -> Self {
        Self {
            sys,
            delta: 0,
            factors: Vec::new(),
        }
    }

    /// Move left descents of `v` not in the right descents of `u` across the pair.
    /// Returns whether `u` changed.
    fn transfer(sys: &CoxeterSystem, u: &mut Element, v: &mut Element) -> bool {
        let mut changed = false;
        while let Some(s) =
            (0..sys.rank()).find(|&s| sys.is_left_descent(v, s) && !sys.is_right_descent(u, s))
        {
            *u = u.compose(sys.simple(s));
            *v = sys.simple(s).compose(v);
            changed = true;
        }
        changed
    }

    /// Right-multiply by a simple element.
    fn push_simple(&mut self, w: Element) {
        if w.is_identity() {
            return;
        }
        self.factors.push(w);
        let mut i = self.factors.len() - 1;
        while i > 0 {
            let (head, tail) = self.factors.split_at_mut(i);
            if !Self::transfer(self.sys, &mut head[i - 1], &mut tail[0]) {
                break;
            }
            i -= 1;
        }
        self.factors.retain(|f| !f.is_identity());
        let w0 = self.sys.longest();
        let full = self.factors.iter().take_while(|f| *f == w0).count();
        if full > 0 {
            self.factors.drain(..full);
            self.delta += full as i64;
        }
    }

    /// Right-multiply by `s^{-1} = Delta^{-1} * (w0 s)`, moving `Delta^{-1}` to the front.
    fn push_inverse(&mut self, s: usize) {
        let w0 = self.sys.longest();
        for f in &mut self.factors {
            *f = w0.compose(f).compose(w0);
        }
        self.delta -= 1;
        self.push_simple(w0.compose(self.sys.simple(s)));
    }

    fn finish(self) -> GarsideNF {
        GarsideNF {
            delta: self.delta,
            factors: self.factors,
        }
    }
}

/// Left normal form of a braid word.
pub fn nf(sys: &CoxeterSystem, b: &BraidWord) -> GarsideNF {
    let mut n = Normalizer::new(sys);
    for &(s, e) in &b.letters {
        if e > 0 {
            n.push_simple(sys.simple(s).clone());
        } else {
            n.push_inverse(s);
        }
    }
    n.finish()
}

pub fn braid_equal(sys: &CoxeterSystem, a: &BraidWord, b: &BraidWord) -> bool {
    nf(sys, a) == nf(sys, b)
}

/// Prefix order: `a <= b` iff `a^{-1} b` is positive.
pub fn leq_prefix(sys: &CoxeterSystem, a: &BraidWord, b: &BraidWord) -> bool {
    nf(sys, &a.inverse().concat(b)).delta >= 0
}

/// `Delta^{-1} <= b <= Delta`.
pub fn is_mikado(sys: &CoxeterSystem, b: &BraidWord) -> bool {
    let d = delta(sys);
    leq_prefix(sys, &d.inverse(), b) && leq_prefix(sys, b, &d)
}

/// Whether consecutive factors are left-weighted and no factor is trivial or `w0`.
pub fn is_left_weighted(sys: &CoxeterSystem, form: &GarsideNF) -> bool {
    let w0 = sys.longest();
    form.factors.iter().all(|f| !f.is_identity() && f != w0)
        && form.factors.windows(2).all(|p| {
            (0..sys.rank())
                .all(|s| !sys.is_left_descent(&p[1], s) || sys.is_right_descent(&p[0], s))
        })
}
