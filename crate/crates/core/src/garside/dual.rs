use super::braid::{mikado_lift, positive_lift, BraidWord};
use super::nf::{braid_equal, is_mikado, nf, GarsideNF};
use crate::absolute::{
    enumerate_nc, initial_simples, kreweras, leq_t, t_reduced_word, NoncrossingPartition,
    StandardCoxeterElement, TWord,
};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::sortable::{sc_with, CambrianTable};
use crate::system::{CoxeterSystem, Element};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// The dual braid monoid generators `t_c` as classical braids.
#[derive(Clone, Debug)]
pub struct DualAtomTable {
    pub coxeter: StandardCoxeterElement,
    /// Reflection root index to its braid word and normal form.
    pub atoms: BTreeMap<usize, (BraidWord, GarsideNF)>,
    /// Window index that first produced each reflection.
    pub window: BTreeMap<usize, usize>,
}

impl DualAtomTable {
    pub fn atom(&self, root: usize) -> Result<&BraidWord> {
        self.atoms.get(&root).map(|a| &a.0).ok_or(Error::NotFound)
    }
}

/// Windows `s_1...s_i s_{i+1} s_i^{-1}...s_1^{-1}` of the periodic word `c^\infty`, for
/// `0 <= i < 2|T|`. Keeps the first window for each reflection and checks that later ones
/// give the same braid.
pub fn dual_atoms(sys: &CoxeterSystem, c: &StandardCoxeterElement) -> Result<DualAtomTable> {
    let n = c.word.len();
    let letter = |j: usize| c.word[j % n];
    let npos = sys.positive_count();
    let mut atoms: BTreeMap<usize, (BraidWord, GarsideNF)> = BTreeMap::new();
    let mut window = BTreeMap::new();
    let mut prefix = sys.identity().clone();
    for i in 0..2 * npos {
        let s = letter(i);
        let root = prefix.apply(s) % npos;
        let mut b = BraidWord::new();
        for j in 0..i {
            b.push(letter(j), 1);
        }
        b.push(s, 1);
        for j in (0..i).rev() {
            b.push(letter(j), -1);
        }
        let form = nf(sys, &b);
        match atoms.get(&root) {
            Some((_, existing)) if *existing != form => return Err(Error::AtomMismatch(i)),
            Some(_) => {}
            None => {
                atoms.insert(root, (b, form));
                window.insert(root, i);
            }
        }
        prefix = prefix.compose(sys.simple(s));
    }
    if atoms.len() != npos {
        return Err(Error::Normalization(format!(
            "windows cover {} of {} reflections",
            atoms.len(),
            npos
        )));
    }
    Ok(DualAtomTable {
        coxeter: c.clone(),
        atoms,
        window,
    })
}

/// Product of the atoms along a T-word.
pub fn dual_word(table: &DualAtomTable, w: &TWord) -> Result<BraidWord> {
    let mut out = BraidWord::new();
    for &r in &w.tuple {
        out = out.concat(table.atom(r)?);
    }
    Ok(out)
}

/// The simple dual braid `x_c`, via the greedy T-reduced word of `x`.
pub fn simple_dual(sys: &CoxeterSystem, table: &DualAtomTable, x: &Element) -> Result<BraidWord> {
    dual_word(table, &t_reduced_word(sys, x))
}

/// [`simple_dual`] in normal form.
pub fn simple_dual_nf(sys: &CoxeterSystem, table: &DualAtomTable, x: &Element) -> Result<GarsideNF> {
    Ok(nf(sys, &simple_dual(sys, table, x)?))
}

/// The Mikado word `x_{N(S_c(x^{-1}c))}` for `x` in `NC(W, c)`.
pub fn mikado_word(sys: &CoxeterSystem, table: &CambrianTable, x: &Element) -> Result<BraidWord> {
    let y = x.inverse().compose(&table.coxeter.element);
    let sy = sc_with(sys, table, &y)?;
    Ok(mikado_lift(sys, x, &sy))
}

fn new_report(sys: &CoxeterSystem, check: &str, c: &StandardCoxeterElement) -> Report {
    Report::new(
        check,
        sys.ctype().to_string(),
        c.word.iter().map(|&s| sys.label(s)).collect(),
    )
}

type Findings = Vec<(Vec<i32>, String)>;

fn merge(report: &mut Report, results: Vec<Result<(usize, Findings)>>) -> Result<()> {
    for r in results {
        let (checked, bad) = r?;
        report.checked += checked;
        for (x, detail) in bad {
            report.push(x, detail);
        }
    }
    Ok(())
}

/// For every `x` in `NC(W, c)`: `x_c` equals the Mikado braid `x_{N(S_c(x^{-1}c))}`, and that
/// Mikado word has `l(x)` letters.
pub fn verify_main_theorem(sys: &CoxeterSystem, c: &StandardCoxeterElement) -> Result<Report> {
    let atoms = dual_atoms(sys, c)?;
    let table = CambrianTable::new(sys, c)?;
    let nc = enumerate_nc(sys, c);
    let mut report = new_report(sys, "main", c);
    report.nc_count = nc.len();
    let results: Vec<_> = nc
        .par_iter()
        .map(|x| -> Result<(usize, Findings)> {
            let y = kreweras(sys, x).element;
            let sy = sc_with(sys, &table, &y)?;
            let mikado = mikado_lift(sys, &x.element, &sy);
            let dual = simple_dual(sys, &atoms, &x.element)?;
            let mut bad = Vec::new();
            if !braid_equal(sys, &dual, &mikado) {
                bad.push((
                    sys.word_labels(&x.element),
                    format!(
                        "x_c = {} but Mikado braid is {}",
                        nf(sys, &dual).format(sys),
                        mikado.format(sys)
                    ),
                ));
            }
            if mikado.len() != x.element.length() {
                bad.push((
                    sys.word_labels(&x.element),
                    format!("Mikado word has {} letters, l(x) = {}", mikado.len(), x.element.length()),
                ));
            }
            Ok((2, bad))
        })
        .collect();
    merge(&mut report, results)?;
    Ok(report)
}

/// Conjugation by an initial simple, restriction to standard parabolic subgroups, and the
/// defining relations `t_c t'_c = (t t' t)_c t_c` of the dual braid monoid.
pub fn check_dual_lemmas(sys: &CoxeterSystem, c: &StandardCoxeterElement) -> Result<Report> {
    let atoms = dual_atoms(sys, c)?;
    let nc = enumerate_nc(sys, c);
    let mut report = new_report(sys, "dual_lemmas", c);
    report.nc_count = nc.len();

    // (sxs)_{scs} = s^{-1} x_c s
    for s in initial_simples(sys, c) {
        let c2 = c.conjugate_initial(sys, s)?;
        let atoms2 = dual_atoms(sys, &c2)?;
        let gen = BraidWord::positive(&[s]);
        let results: Vec<_> = nc
            .par_iter()
            .map(|x| -> Result<(usize, Findings)> {
                let sxs = sys.simple(s).compose(&x.element).compose(sys.simple(s));
                let lhs = simple_dual(sys, &atoms2, &sxs)?;
                let rhs = gen
                    .inverse()
                    .concat(&simple_dual(sys, &atoms, &x.element)?)
                    .concat(&gen);
                let mut bad = Vec::new();
                if !braid_equal(sys, &lhs, &rhs) {
                    bad.push((
                        sys.word_labels(&x.element),
                        format!("conjugation by {} fails", sys.simple_name(s)),
                    ));
                }
                Ok((1, bad))
            })
            .collect();
        merge(&mut report, results)?;
    }

    // x_c = x_{c_I} for x in a standard parabolic subgroup
    let n = sys.rank();
    for mask in 1..(1u32 << n) - 1 {
        let subset: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let sub = sys.parabolic(&subset)?;
        let sub_word: Vec<usize> = c
            .word
            .iter()
            .filter_map(|s| subset.iter().position(|t| t == s))
            .collect();
        let c_sub = StandardCoxeterElement::new(&sub, sub_word)?;
        let sub_atoms = dual_atoms(&sub, &c_sub)?;
        let results: Vec<_> = enumerate_nc(&sub, &c_sub)
            .par_iter()
            .map(|x| -> Result<(usize, Findings)> {
                let inner = simple_dual(&sub, &sub_atoms, &x.element)?.map_letters(&subset);
                let outer_x = sub.embed_into(sys, &x.element);
                let outer = simple_dual(sys, &atoms, &outer_x)?;
                let mut bad = Vec::new();
                if !braid_equal(sys, &inner, &outer) {
                    bad.push((
                        sys.word_labels(&outer_x),
                        format!("differs from the parabolic subgroup on {subset:?}"),
                    ));
                }
                Ok((1, bad))
            })
            .collect();
        merge(&mut report, results)?;
    }

    // dual braid relations
    let npos = sys.positive_count();
    let results: Vec<_> = (0..npos)
        .into_par_iter()
        .map(|r| -> Result<(usize, Findings)> {
            let t = &sys.reflections()[r];
            let mut checked = 0;
            let mut bad = Vec::new();
            for r2 in 0..npos {
                if r2 == r {
                    continue;
                }
                let tt = t.compose(&sys.reflections()[r2]);
                if !leq_t(sys, &tt, &c.element) {
                    continue;
                }
                checked += 1;
                let conj = sys.conjugate_reflection(t, r2);
                let lhs = atoms.atom(r)?.concat(atoms.atom(r2)?);
                let rhs = atoms.atom(conj)?.concat(atoms.atom(r)?);
                if !braid_equal(sys, &lhs, &rhs) {
                    bad.push((
                        sys.word_labels(&tt),
                        format!("relation fails for reflections {r} and {r2}"),
                    ));
                }
            }
            Ok((checked, bad))
        })
        .collect();
    merge(&mut report, results)?;
    Ok(report)
}

/// Checks that `x_c` projects to `x`, is a Mikado braid, and does not depend on the
/// T-reduced word within its Hurwitz orbit.
pub fn check_simple_duals(
    sys: &CoxeterSystem,
    c: &StandardCoxeterElement,
    hurwitz_cap: usize,
) -> Result<Report> {
    let atoms = dual_atoms(sys, c)?;
    let nc = enumerate_nc(sys, c);
    let mut report = new_report(sys, "simple_duals", c);
    report.nc_count = nc.len();
    let results: Vec<_> = nc
        .par_iter()
        .map(|x: &NoncrossingPartition| -> Result<(usize, Findings)> {
            let word = t_reduced_word(sys, &x.element);
            let reference = nf(sys, &dual_word(&atoms, &word)?);
            let mut bad = Vec::new();
            let label = sys.word_labels(&x.element);
            if reference.project(sys) != x.element {
                bad.push((label.clone(), "x_c does not project to x".into()));
            }
            if !is_mikado(sys, &reference.to_braid(sys)) {
                bad.push((label.clone(), "x_c is not a Mikado braid".into()));
            }
            let orbit = crate::absolute::hurwitz_orbit(sys, &word, hurwitz_cap)?;
            for w in &orbit {
                if nf(sys, &dual_word(&atoms, w)?) != reference {
                    bad.push((label.clone(), format!("T-word {:?} gives another braid", w.tuple)));
                    break;
                }
            }
            Ok((2 + orbit.len(), bad))
        })
        .collect();
    merge(&mut report, results)?;
    Ok(report)
}

/// `x_c = c`'s positive lift when `x = c`.
pub fn coxeter_lift_matches(sys: &CoxeterSystem, c: &StandardCoxeterElement) -> Result<bool> {
    let atoms = dual_atoms(sys, c)?;
    Ok(braid_equal(
        sys,
        &simple_dual(sys, &atoms, &c.element)?,
        &positive_lift(sys, &c.element),
    ))
}
