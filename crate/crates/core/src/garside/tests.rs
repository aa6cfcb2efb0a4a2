use super::*;
use crate::absolute::{standard_coxeter_elements, StandardCoxeterElement};
use crate::system::{build_system, CoxeterSystem};
use proptest::prelude::*;

fn sys(name: &str) -> CoxeterSystem {
    build_system(name.parse().unwrap()).unwrap()
}

fn word(s: &CoxeterSystem, text: &str) -> BraidWord {
    BraidWord::parse(s, text).unwrap()
}

#[test]
fn braid_relation_rewrites() {
    let a3 = sys("A3");
    assert!(braid_equal(
        &a3,
        &word(&a3, "s2 s1 s2 s3 s2^-1 s3^-1"),
        &word(&a3, "s2 s1 s3^-1 s2")
    ));
    assert!(!braid_equal(&a3, &word(&a3, "s1 s2"), &word(&a3, "s2 s1")));
    assert!(braid_equal(&a3, &word(&a3, "s1 s3"), &word(&a3, "s3 s1")));
}

#[test]
fn normal_form_of_delta_and_inverses() {
    let a2 = sys("A2");
    let d = nf(&a2, &word(&a2, "s1 s2 s1"));
    assert_eq!((d.delta, d.factors.len()), (1, 0));
    let inv = nf(&a2, &word(&a2, "s1^-1"));
    assert_eq!(inv.delta, -1);
    assert_eq!(inv.factors, vec![a2.word_element(&[0, 1])]);
    assert_eq!(nf(&a2, &word(&a2, "s1 s1^-1")), GarsideNF::identity());
    assert_eq!(d.format(&a2), "D^1");
}

#[test]
fn mikado_example() {
    let a3 = sys("A3");
    let x = a3.word_element(&[1, 0, 2, 1]);
    let y = a3.word_element(&[2, 1]);
    let b = mikado_lift(&a3, &x, &y);
    assert!(braid_equal(&a3, &b, &word(&a3, "s2 s1 s3^-1 s2")));
    assert_eq!(b.len(), 4);
    assert!(is_mikado(&a3, &b));
    // N(e) is empty, so the lift is positive
    assert_eq!(mikado_lift(&a3, &x, a3.identity()), positive_lift(&a3, &x));
}

#[test]
fn atom_example() {
    let a2 = sys("A2");
    let c = StandardCoxeterElement::parse(&a2, "s1 s2").unwrap();
    let table = dual_atoms(&a2, &c).unwrap();
    let t = a2.word_element(&[0, 1, 0]);
    let root = a2.reflection_index(&t).unwrap();
    assert!(braid_equal(&a2, table.atom(root).unwrap(), &word(&a2, "s1 s2 s1^-1")));
    assert!(coxeter_lift_matches(&a2, &c).unwrap());
}

#[test]
fn braid_text_and_json_roundtrip() {
    let b3 = sys("B3");
    let b = word(&b3, "s0 s1^-1 s2");
    assert_eq!(b.format(&b3), "s0 s1^-1 s2");
    let json = serde_json::to_string(&b.to_json(&b3)).unwrap();
    let back: BraidJson = serde_json::from_str(&json).unwrap();
    assert_eq!(BraidWord::from_json(&b3, &back).unwrap(), b);
    assert!(BraidWord::parse(&b3, "s1^2").is_err());
}

#[test]
fn main_theorem_small_types() {
    for name in ["A1", "A2", "A3", "B2", "B3", "I2(5)", "D4"] {
        let s = sys(name);
        for c in standard_coxeter_elements(&s) {
            let r = verify_main_theorem(&s, &c).unwrap();
            assert!(r.ok(), "{name} {:?}: {:?}", c.word, &r.violations[..1]);
            let r = check_dual_lemmas(&s, &c).unwrap();
            assert!(r.ok(), "{name} {:?}: {:?}", c.word, &r.violations[..1]);
        }
    }
}

#[test]
fn simple_duals_are_mikado() {
    let s = sys("A3");
    for c in standard_coxeter_elements(&s) {
        let r = check_simple_duals(&s, &c, 1000).unwrap();
        assert!(r.ok(), "{:?}", r.violations);
    }
}

fn braid_strategy(rank: usize) -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0..rank, any::<bool>()), 0..14)
}

fn to_braid(letters: &[(usize, bool)]) -> BraidWord {
    BraidWord {
        letters: letters.iter().map(|&(s, p)| (s, if p { 1 } else { -1 })).collect(),
    }
}

proptest! {
    #[test]
    fn normal_form_is_canonical(letters in braid_strategy(3), name in prop::sample::select(vec!["A3", "B3", "H3"])) {
        let s = sys(name);
        let b = to_braid(&letters);
        let form = nf(&s, &b);
        prop_assert!(is_left_weighted(&s, &form));
        prop_assert_eq!(nf(&s, &form.to_braid(&s)), form.clone());
        prop_assert_eq!(form.project(&s), b.project(&s));
        prop_assert_eq!(nf(&s, &b.concat(&b.inverse())), GarsideNF::identity());
    }

    #[test]
    fn normal_form_respects_multiplication(a in braid_strategy(3), b in braid_strategy(3)) {
        let s = sys("A3");
        let (a, b) = (to_braid(&a), to_braid(&b));
        let lhs = nf(&s, &a.concat(&b));
        let rhs = nf(&s, &nf(&s, &a).to_braid(&s).concat(&nf(&s, &b).to_braid(&s)));
        prop_assert_eq!(lhs, rhs);
    }
}
