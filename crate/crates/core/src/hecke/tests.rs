use super::*;
use crate::absolute::standard_coxeter_elements;
use crate::garside::BraidWord;
use proptest::prelude::*;
use std::collections::HashSet;

fn sys(name: &str) -> CoxeterSystem {
    build_system(name.parse().unwrap()).unwrap()
}

fn lp(terms: &[(i64, i32)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms)
}

#[test]
fn quadratic_relation_and_inverse() {
    let a1 = sys("A1");
    let h = Hecke::new(&a1).unwrap();
    let ts = h.standard(a1.simple(0)).unwrap();
    let sq = h.multiply(&ts, &ts);
    assert_eq!(sq.coefficient(1), lp(&[(1, -2), (-1, 0)]));
    assert_eq!(sq.coefficient(0), lp(&[(1, -2)]));
    assert_eq!(h.mul_simple_inverse(&ts, 0), h.identity());
    let w = h.standard(a1.simple(0)).unwrap();
    assert_eq!(h.multiply(&h.identity(), &w), w);
}

#[test]
fn phi_of_positive_lift_is_standard_basis() {
    let b3 = sys("B3");
    let h = Hecke::new(&b3).unwrap();
    for w in h.elements() {
        assert_eq!(h.phi(&positive_lift(&b3, w)), h.standard(w).unwrap());
    }
    assert_eq!(h.phi(&BraidWord::new()), h.identity());
}

/// Bruhat order from the subword property on reduced words.
fn subword_below(sys: &CoxeterSystem, w: &Element) -> HashSet<Element> {
    let word = sys.reduced_word(w);
    (0u32..1 << word.len())
        .map(|mask| {
            let sub: Vec<usize> = (0..word.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| word[i])
                .collect();
            sys.word_element(&sub)
        })
        .collect()
}

#[test]
fn bruhat_matches_subwords_and_contains_weak_order() {
    for name in ["A3", "B3", "I2(5)"] {
        let s = sys(name);
        let h = Hecke::new(&s).unwrap();
        let below = h.bruhat();
        for (x, w) in h.elements().iter().enumerate() {
            let sub = subword_below(&s, w);
            let inv_w: HashSet<usize> = s.inversion_set(w).into_iter().collect();
            for (y, u) in h.elements().iter().enumerate() {
                assert_eq!(below[x][y], sub.contains(u), "{name} {x} {y}");
                if s.inversion_set(u).iter().all(|r| inv_w.contains(r)) {
                    assert!(below[x][y]);
                }
            }
        }
    }
}

/// `bar(sum p_y T_y) = sum bar(p_y) T_{y^-1}^-1`.
fn bar(s: &CoxeterSystem, h: &Hecke, a: &HeckeElement) -> HeckeElement {
    let mut out = HeckeElement::zero();
    for (&y, p) in &a.coords {
        let inv = positive_lift(s, &h.elements()[y].inverse()).inverse();
        out.add_scaled(&h.phi(&inv), &p.bar());
    }
    out
}

#[test]
fn kl_bases_are_bar_invariant() {
    for name in ["A2", "A3", "B3", "I2(6)"] {
        let s = sys(name);
        let h = Hecke::new(&s).unwrap();
        for conv in [KlConvention::Positive, KlConvention::Negative] {
            let kl = kl_basis(&h, conv).unwrap();
            for x in 0..h.elements().len() {
                let c = kl.standard_coords(&h, x);
                assert_eq!(bar(&s, &h, &c), c, "{name} {conv:?} {x}");
                let e = kl_expand(&h, &kl, &c);
                assert_eq!(e.len(), 1);
                assert_eq!(e[&x], LaurentPoly::one());
            }
        }
    }
}

#[test]
fn rank_one_basis() {
    let a1 = sys("A1");
    let h = Hecke::new(&a1).unwrap();
    let pos = kl_basis(&h, KlConvention::Positive).unwrap();
    assert_eq!(pos.standard_coords(&h, 1).coefficient(0), lp(&[(1, 1)]));
    let neg = kl_basis(&h, KlConvention::Negative).unwrap();
    assert_eq!(neg.standard_coords(&h, 1).coefficient(0), lp(&[(-1, -1)]));
    // T_s = v^-1 C_s + v^-2 and T_s^-1 = v C_s + v^2 in the negative convention
    let ts = h.standard(a1.simple(0)).unwrap();
    let e = kl_expand(&h, &neg, &ts);
    assert_eq!((e[&1].clone(), e[&0].clone()), (lp(&[(1, -1)]), lp(&[(1, -2)])));
    let e = kl_expand(&h, &pos, &ts);
    assert_eq!(e[&0], lp(&[(-1, 0)]));
}

#[test]
fn kl_polynomials_in_a3() {
    // P_{e, s2 s1 s3 s2} = 1 + q is the first nontrivial one; in these coordinates the
    // positive convention gives h = v^2 + v^4.
    let a3 = sys("A3");
    let h = Hecke::new(&a3).unwrap();
    let kl = kl_basis(&h, KlConvention::Positive).unwrap();
    let x = h.index_of(&a3.word_element(&[1, 0, 2, 1])).unwrap();
    assert_eq!(kl.coefficient(0, x), lp(&[(1, 2), (1, 4)]));
}

#[test]
fn pinned_convention_is_negative() {
    assert_eq!(pinned_convention().unwrap(), KlConvention::Negative);
}

#[test]
fn simple_duals_are_positive() {
    for name in ["A2", "A3", "B2", "I2(5)"] {
        let s = sys(name);
        for c in standard_coxeter_elements(&s) {
            let r = check_positivity(&s, &c).unwrap();
            assert!(r.ok(), "{name}: {:?}", r.violations);
            assert!(r.header.is_some());
        }
    }
}

proptest! {
    #[test]
    fn phi_factors_through_braid_equality(letters in prop::collection::vec((0usize..3, any::<bool>()), 0..10)) {
        let s = sys("A3");
        let h = Hecke::new(&s).unwrap();
        let b = BraidWord {
            letters: letters.iter().map(|&(g, p)| (g, if p { 1 } else { -1 })).collect(),
        };
        let normal = crate::garside::nf(&s, &b).to_braid(&s);
        prop_assert_eq!(h.phi(&b), h.phi(&normal));
        prop_assert_eq!(h.multiply(&h.phi(&b), &h.phi(&b.inverse())), h.identity());
    }
}
