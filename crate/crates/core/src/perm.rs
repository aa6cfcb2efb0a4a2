//! Permutation models of the classical types.
//!
//! Type `A_n` acts on `1..=n+1`; types `B_n` and `D_n` act by signed
//! permutations of `{-n..-1, 1..n}`. A permutation is stored in one-line
//! notation: `images[i - 1] = w(i)` for `i = 1..=degree`.

use crate::error::{Error, Result};
use crate::system::{CoxeterSystem, Element};
use crate::types::Family;
use std::collections::BTreeSet;

/// Number of points the permutation model acts on (positive points only for signed types).
pub fn degree(sys: &CoxeterSystem) -> Result<usize> {
    if !sys.is_full() {
        return Err(Error::WrongType {
            expected: "a full classical system",
            got: format!("parabolic subsystem of {}", sys.ctype()),
        });
    }
    let ct = sys.ctype();
    match ct.family {
        Family::A => Ok(ct.rank + 1),
        Family::B | Family::D => Ok(ct.rank),
        _ => Err(Error::WrongType {
            expected: "A, B or D",
            got: ct.to_string(),
        }),
    }
}

fn is_signed(sys: &CoxeterSystem) -> bool {
    matches!(sys.ctype().family, Family::B | Family::D)
}

/// Image of a (possibly negative) point under a one-line permutation.
#[inline]
pub fn apply(images: &[i32], x: i32) -> i32 {
    if x > 0 {
        images[x as usize - 1]
    } else {
        -images[(-x) as usize - 1]
    }
}

/// Apply simple generator `s` (internal index) to a point.
fn apply_generator(sys: &CoxeterSystem, s: usize, x: i32) -> i32 {
    let label = sys.label(s);
    let swap = |x: i32, a: i32, b: i32| {
        if x == a {
            b
        } else if x == b {
            a
        } else if x == -a {
            -b
        } else if x == -b {
            -a
        } else {
            x
        }
    };
    match (sys.ctype().family, label) {
        (Family::B, 0) => {
            if x.abs() == 1 {
                -x
            } else {
                x
            }
        }
        (Family::D, 0) => swap(x, 1, -2),
        (Family::A, i) => swap(x, i, i + 1),
        (_, i) => swap(x, i, i + 1),
    }
}

/// One-line notation of an element.
pub fn to_perm(sys: &CoxeterSystem, w: &Element) -> Result<Vec<i32>> {
    let deg = degree(sys)?;
    let mut images: Vec<i32> = (1..=deg as i32).collect();
    for &s in sys.reduced_word(w).iter().rev() {
        for v in images.iter_mut() {
            *v = apply_generator(sys, s, *v);
        }
    }
    Ok(images)
}

fn validate(sys: &CoxeterSystem, images: &[i32]) -> Result<()> {
    let deg = degree(sys)?;
    if images.len() != deg {
        return Err(Error::Parse(format!(
            "expected {deg} entries, got {}",
            images.len()
        )));
    }
    let abs: BTreeSet<i32> = images.iter().map(|v| v.abs()).collect();
    if abs.len() != deg || abs.iter().any(|&v| v < 1 || v > deg as i32) {
        return Err(Error::Parse(format!("not a permutation: {images:?}")));
    }
    if !is_signed(sys) && images.iter().any(|&v| v < 0) {
        return Err(Error::Parse(
            "negative entry in an unsigned permutation".into(),
        ));
    }
    if sys.ctype().family == Family::D && images.iter().filter(|&&v| v < 0).count() % 2 == 1 {
        return Err(Error::Parse(format!(
            "{images:?} has an odd number of sign changes, not in type D"
        )));
    }
    Ok(())
}

/// The element with the given one-line notation.
pub fn from_perm(sys: &CoxeterSystem, images: &[i32]) -> Result<Element> {
    validate(sys, images)?;
    let family = sys.ctype().family;
    let mut w = images.to_vec();
    let mut word = Vec::new();
    loop {
        // find a right descent, then replace w by w*s
        let found = (0..sys.rank()).find(|&s| {
            let label = sys.label(s);
            match (family, label) {
                (Family::B, 0) => w[0] < 0,
                (Family::D, 0) => w[0] + w[1] < 0,
                (_, i) => w[i as usize - 1] > w[i as usize],
            }
        });
        let Some(s) = found else { break };
        match (family, sys.label(s)) {
            (Family::B, 0) => w[0] = -w[0],
            (Family::D, 0) => {
                let (a, b) = (w[0], w[1]);
                w[0] = -b;
                w[1] = -a;
            }
            (_, i) => w.swap(i as usize - 1, i as usize),
        }
        word.push(s);
    }
    word.reverse();
    Ok(sys.word_element(&word))
}

/// Cycle decomposition. In signed types each cycle and its negative are listed once:
/// paired cycles as `((a,b))`, balanced cycles as `[a,b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cycle {
    Plain(Vec<i32>),
    Paired(Vec<i32>),
    Balanced(Vec<i32>),
}

pub fn cycles(sys: &CoxeterSystem, images: &[i32]) -> Vec<Cycle> {
    let deg = images.len() as i32;
    let signed = is_signed(sys);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for start in 1..=deg {
        if seen.contains(&start) {
            continue;
        }
        let mut cyc = vec![start];
        seen.insert(start);
        let mut x = apply(images, start);
        while x != start {
            cyc.push(x);
            seen.insert(x);
            x = apply(images, x);
        }
        if !signed {
            if cyc.len() > 1 {
                out.push(Cycle::Plain(cyc));
            }
            continue;
        }
        if cyc.contains(&-start) {
            let half = cyc.len() / 2;
            cyc.truncate(half);
            out.push(Cycle::Balanced(cyc));
        } else {
            for &v in &cyc {
                seen.insert(-v);
            }
            if cyc.len() > 1 {
                out.push(Cycle::Paired(cyc));
            }
        }
    }
    out
}

pub fn format_cycles(sys: &CoxeterSystem, images: &[i32]) -> String {
    let join = |c: &[i32]| {
        c.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let parts: Vec<String> = cycles(sys, images)
        .iter()
        .map(|c| match c {
            Cycle::Plain(v) => format!("({})", join(v)),
            Cycle::Paired(v) => format!("(({}))", join(v)),
            Cycle::Balanced(v) => format!("[{}]", join(v)),
        })
        .collect();
    if parts.is_empty() {
        "e".into()
    } else {
        parts.concat()
    }
}

/// Parse cycle notation: `(1,3,6)(2,5)`, `((3,-8))((7,5,-2))`, `[4,6,3]`.
///
/// In signed types a plain cycle not closed under negation is completed by its negative.
pub fn parse_cycles(sys: &CoxeterSystem, text: &str) -> Result<Vec<i32>> {
    let deg = degree(sys)? as i32;
    let signed = is_signed(sys);
    let mut images: Vec<i32> = (1..=deg).collect();
    let mut assigned: BTreeSet<i32> = BTreeSet::new();
    let mut set = |from: i32, to: i32, images: &mut Vec<i32>| -> Result<()> {
        if from == 0 || from.abs() > deg || to == 0 || to.abs() > deg {
            return Err(Error::Parse(format!("point out of range in {text:?}")));
        }
        if !signed && (from < 0 || to < 0) {
            return Err(Error::Parse(
                "negative point in an unsigned permutation".into(),
            ));
        }
        if !assigned.insert(from) {
            return Err(Error::Parse(format!("point {from} appears twice")));
        }
        if from > 0 {
            images[from as usize - 1] = to;
        } else {
            images[(-from) as usize - 1] = -to;
        }
        Ok(())
    };
    let bad = || Error::Parse(format!("malformed cycle notation {text:?}"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let (kind, body, tail) = if let Some(r) = rest.strip_prefix("((") {
            let end = r.find("))").ok_or_else(bad)?;
            ('p', &r[..end], &r[end + 2..])
        } else if let Some(r) = rest.strip_prefix('[') {
            let end = r.find(']').ok_or_else(bad)?;
            ('b', &r[..end], &r[end + 1..])
        } else if let Some(r) = rest.strip_prefix('(') {
            let end = r.find(')').ok_or_else(bad)?;
            ('c', &r[..end], &r[end + 1..])
        } else {
            return Err(bad());
        };
        let pts: Vec<i32> = body
            .split(',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        rest = tail;
        if pts.is_empty() {
            continue;
        }
        if (kind == 'p' || kind == 'b') && !signed {
            return Err(Error::Parse(
                "paired/balanced cycles need a signed type".into(),
            ));
        }
        let full: Vec<i32> = match kind {
            'b' => pts.iter().copied().chain(pts.iter().map(|v| -v)).collect(),
            _ => pts.clone(),
        };
        let closed = full.iter().all(|v| full.contains(&-v));
        let k = full.len();
        for i in 0..k {
            set(full[i], full[(i + 1) % k], &mut images)?;
        }
        if signed && !closed {
            for i in 0..k {
                set(-full[i], -full[(i + 1) % k], &mut images)?;
            }
        }
    }
    validate(sys, &images)?;
    Ok(images)
}
