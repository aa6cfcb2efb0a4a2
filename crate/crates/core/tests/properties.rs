use coxeter_dual::absolute::{
    enumerate_nc, hurwitz_orbit, kreweras, standard_coxeter_elements, t_reduced_word,
};
use coxeter_dual::garside::{
    braid_equal, dual_atoms, dual_word, is_left_weighted, is_mikado, mikado_lift, nf,
    simple_dual, BraidWord,
};
use coxeter_dual::sortable::{is_sortable, read_map, sc};
use coxeter_dual::{build_system, CoxeterSystem, Element};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn sys(name: &str) -> CoxeterSystem {
    build_system(name.parse().unwrap()).unwrap()
}

fn element(s: &CoxeterSystem, word: &[usize]) -> Element {
    let w: Vec<usize> = word.iter().map(|&i| i % s.rank()).collect();
    s.word_element(&w)
}

fn words() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..8, 0..30)
}

fn types() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["A4", "B4", "D5", "F4", "H3", "I2(7)"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inversion_sets_compose(name in types(), a in words(), b in words()) {
        let s = sys(name);
        let (x, y) = (element(&s, &a), element(&s, &b));
        let nx: BTreeSet<usize> = s.inversion_set(&x).into_iter().collect();
        let conj: BTreeSet<usize> = s.inversion_set(&y).into_iter().map(|r| s.conjugate_reflection(&x, r)).collect();
        let nxy: BTreeSet<usize> = s.inversion_set(&x.compose(&y)).into_iter().collect();
        prop_assert_eq!(nxy, nx.symmetric_difference(&conj).copied().collect::<BTreeSet<_>>());
        prop_assert_eq!(s.inversion_set(&x).len(), x.length());
    }

    #[test]
    fn mikado_lifts_lie_between_delta_inverse_and_delta(name in prop::sample::select(vec!["A3", "B3", "H3"]), a in words(), b in words()) {
        let s = sys(name);
        let (x, y) = (element(&s, &a), element(&s, &b));
        let m = mikado_lift(&s, &x, &y);
        prop_assert!(is_mikado(&s, &m));
        prop_assert_eq!(m.project(&s), x.clone());
        prop_assert_eq!(m.len(), x.length());
        let form = nf(&s, &m);
        prop_assert!(is_left_weighted(&s, &form));
        prop_assert!(form.delta >= -1 && form.delta <= 1);
    }

    #[test]
    fn cambrian_round_trip(name in prop::sample::select(vec!["A5", "B4", "D5", "I2(9)"]), pick in any::<prop::sample::Index>(), pick_x in any::<prop::sample::Index>()) {
        let s = sys(name);
        let cs = standard_coxeter_elements(&s);
        let c = pick.get(&cs);
        let nc = enumerate_nc(&s, c);
        let x = pick_x.get(&nc);
        let w = sc(&s, c, &x.element).unwrap();
        prop_assert!(is_sortable(&s, c, &w));
        prop_assert_eq!(&read_map(&s, c, &w).unwrap().element, &x.element);
        // Kreweras complement stays in NC and composes back to c
        let y = kreweras(&s, x);
        prop_assert_eq!(x.element.compose(&y.element), c.element.clone());
    }

    #[test]
    fn hurwitz_moves_preserve_simple_duals(name in prop::sample::select(vec!["A4", "B3", "D4"]), pick in any::<prop::sample::Index>(), pick_x in any::<prop::sample::Index>()) {
        let s = sys(name);
        let cs = standard_coxeter_elements(&s);
        let c = pick.get(&cs);
        let atoms = dual_atoms(&s, c).unwrap();
        let nc = enumerate_nc(&s, c);
        let x = &pick_x.get(&nc).element;
        let word = t_reduced_word(&s, x);
        let reference = simple_dual(&s, &atoms, x).unwrap();
        for w in hurwitz_orbit(&s, &word, 100_000).unwrap() {
            prop_assert_eq!(w.product(&s), x.clone());
            prop_assert!(braid_equal(&s, &dual_word(&atoms, &w).unwrap(), &reference));
        }
    }

    #[test]
    fn free_reduction_does_not_change_normal_form(name in prop::sample::select(vec!["A3", "B3", "I2(5)"]), letters in prop::collection::vec((0usize..3, any::<bool>()), 0..16), at in any::<prop::sample::Index>(), g in 0usize..3) {
        let s = sys(name);
        let g = g % s.rank();
        let letters: Vec<(usize, i8)> = letters.into_iter().map(|(a, p)| (a % s.rank(), if p { 1 } else { -1 })).collect();
        let b = BraidWord { letters: letters.clone() };
        let i = if letters.is_empty() { 0 } else { at.index(letters.len() + 1) };
        let mut inserted = letters;
        inserted.splice(i..i, [(g, -1), (g, 1)]);
        prop_assert_eq!(nf(&s, &b), nf(&s, &BraidWord { letters: inserted }));
    }
}
