use crate::absolute::StandardCoxeterElement;
use crate::error::{Error, Result};
use crate::system::{CoxeterSystem, Element};
use crate::types::Family;

/// `s t s ...` with `k` letters.
fn alternating(sys: &CoxeterSystem, s: usize, t: usize, k: usize) -> Element {
    let word: Vec<usize> = (0..k).map(|i| if i % 2 == 0 { s } else { t }).collect();
    sys.word_element(&word)
}

/// `S_c` in type `I2(m)` for `c = st`.
///
/// `e -> e`, `t -> t`, `st -> w0`, and the reflection `st...s` with `k` letters
/// (`k` odd, `k <= 2m - 3`) goes to `st...` with `(k + 1) / 2` letters.
pub fn sc_dihedral(
    sys: &CoxeterSystem,
    c: &StandardCoxeterElement,
    x: &Element,
) -> Result<Element> {
    let ct = sys.ctype();
    if ct.family != Family::I2 || !sys.is_full() {
        return Err(Error::WrongType {
            expected: "I2(m)",
            got: ct.to_string(),
        });
    }
    let m = ct.m.unwrap() as usize;
    let (s, t) = (c.word[0], c.word[1]);
    if x.is_identity() {
        return Ok(x.clone());
    }
    if x == sys.simple(t) {
        return Ok(x.clone());
    }
    if *x == c.element {
        return Ok(sys.longest().clone());
    }
    for k in (1..=2 * m - 3).step_by(2) {
        if *x == alternating(sys, s, t, k) {
            return Ok(alternating(sys, s, t, k.div_ceil(2)));
        }
    }
    Err(Error::NotBelowCoxeter)
}
