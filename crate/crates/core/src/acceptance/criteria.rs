use std::cmp::Reverse;

use crate::acceptance::{canonical_corpus, classification_corpus, auslander_a3_nonlinear, full_corpus, Facts};
use crate::checks::{
    cy_spot_check, gldim_or_none, is_n_rep_finite, is_self_injective, is_tau_n_finite, iwanaga_gorenstein_dim, vosnex,
    Verdict,
};
use crate::derived::{amiot_hom, ProjComplex, DEFAULT_WINDOW_CAP};
use crate::error::Result;
use crate::exactla::Matrix;
use crate::families::{dynkin_path_algebra, endomorphism_quiver_algebra, higher_auslander_chain, linear_nakayama};
use crate::field::{Field, PrimeField};
use crate::homolog::DEFAULT_RESOLUTION_CAP;
use crate::preproj::{
    preprojective_algebra, preprojective_module, stable_endomorphism, PreprojectiveAlgebra, DEFAULT_TAU_CAP,
};
use crate::quivalg::{quiver_presentation, Algebra, Presentation, Quiver};
use crate::repmod::{socle_dims, Representation};

fn presented<F: Field>(a: &Algebra<F>, n: usize) -> Result<(PreprojectiveAlgebra<F>, Presentation<F>)> {
    let t = preprojective_algebra(a, n, DEFAULT_TAU_CAP)?;
    let p = quiver_presentation(&t.algebra)?;
    Ok((t, p))
}

/// Vertices ordered as in the published table: by `dim P_v`, larger socle first.
fn table_order<F: Field>(a: &Algebra<F>) -> Vec<usize> {
    let mut vs: Vec<usize> = (0..a.num_vertices()).collect();
    vs.sort_by_key(|&v| {
        let p = Representation::projective(a, v);
        (p.dim(), Reverse(socle_dims(&p).iter().sum::<usize>()))
    });
    vs
}

/// `∘ → ∘ ← ∘`.
fn cospan() -> Quiver {
    Quiver::from_labels(&["1", "2", "3"], &[("a", "1", "2"), ("b", "3", "2")]).expect("valid quiver")
}

/// Gldim of `End(Λ̃)` and of the stable endomorphism algebra.
fn end_and_gamma_gldims<F: Field>(a: &Algebra<F>, n: usize) -> Result<(Option<usize>, Option<usize>, usize)> {
    let split = preprojective_module(a, n, DEFAULT_TAU_CAP)?;
    let end = endomorphism_quiver_algebra(&split.basic_summands()?)?;
    let g_end = gldim_or_none(&end, DEFAULT_RESOLUTION_CAP)?;
    let st = stable_endomorphism(a, n, DEFAULT_TAU_CAP)?;
    if st.algebra.dim() == 0 {
        return Ok((g_end, Some(0), 0));
    }
    let gamma = quiver_presentation(&st.algebra)?.algebra;
    Ok((g_end, gldim_or_none(&gamma, DEFAULT_RESOLUTION_CAP)?, gamma.dim()))
}

pub(crate) fn auslander_a3(facts: &mut Facts) -> Result<()> {
    let f = PrimeField::default();
    let a = auslander_a3_nonlinear(&f)?;
    let split = preprojective_module(&a, 2, DEFAULT_TAU_CAP)?;
    let order = table_order(&a);
    let proj: Vec<usize> = order.iter().map(|&v| split.iterates[v][0].dim()).collect();
    facts.eq("projective dimensions in table order", proj, vec![1, 1, 3, 3, 3, 4]);
    let first: Vec<usize> = order.iter().map(|&v| split.iterates[v].get(1).map_or(0, Representation::dim)).collect();
    facts.eq("tau_2^- totals", first, vec![1, 1, 3, 0, 0, 0]);
    let second: usize = split.iterates.iter().filter_map(|it| it.get(2)).map(Representation::dim).sum();
    facts.eq("tau_2^-2 vanishes", second, 0);
    let p_free = stable_endomorphism(&a, 2, DEFAULT_TAU_CAP)?;
    facts.eq("projective-free summands", p_free.summands.len(), 3);
    let gamma = quiver_presentation(&p_free.algebra)?;
    facts.eq("Gamma dimension", p_free.algebra.dim(), 5);
    let q = gamma.algebra.quiver();
    facts.check("Gamma quiver is a cospan", q.opposite().is_isomorphic(&cospan()), format!("{} vertices, {} arrows", q.num_vertices(), q.num_arrows()));
    facts.eq("Gamma has no relations", gamma.relation_counts.iter().flatten().sum::<usize>(), 0);
    facts.eq("Gamma equals End of the projective-free part", p_free.identification_holds()?, Some(true));
    let (_, p) = presented(&a, 2)?;
    let tq = p.algebra.quiver();
    facts.eq("preprojective quiver size", (tq.num_vertices(), tq.num_arrows()), (6, 9));
    facts.eq("preprojective relations", p.relation_counts.iter().flatten().sum::<usize>(), 9);
    Ok(())
}

/// Kernel of the length-2 paths `i -> j` of a presentation in the algebra
/// they were lifted from, computed directly from the arrow elements.
fn quadratic_kernels<F: Field>(t: &PreprojectiveAlgebra<F>, p: &Presentation<F>) -> Vec<(usize, usize, usize, Matrix<F>)> {
    let q = p.algebra.quiver();
    let b = &t.algebra;
    let mut out = Vec::new();
    for i in 0..q.num_vertices() {
        for j in 0..q.num_vertices() {
            let paths: Vec<(usize, usize)> = q
                .arrows_from(i)
                .flat_map(|x| q.arrows_from(q.arrow(x).target).filter(move |&y| q.arrow(y).target == j).map(move |y| (x, y)))
                .collect();
            if paths.is_empty() {
                continue;
            }
            let cols: Vec<_> = paths.iter().map(|&(x, y)| b.multiply(&p.arrow_elements[x], &p.arrow_elements[y])).collect();
            let k = Matrix::from_columns(b.field(), b.dim(), &cols).null_space();
            out.push((i, j, paths.len(), k));
        }
    }
    out
}

pub(crate) fn auslander_a4(facts: &mut Facts) -> Result<()> {
    let f = PrimeField::default();
    let aus = higher_auslander_chain(&f, 4, 1)?.pop().expect("chain has two stages");
    let (t, p) = presented(&aus, 2)?;
    let q = p.algebra.quiver();
    facts.eq("vertices", q.num_vertices(), 10);
    facts.eq("arrows", q.num_arrows(), 18);
    facts.eq("presentation dimension", p.algebra.dim(), t.algebra.dim());
    facts.eq("self-injective", is_self_injective(&p.algebra).verdict, Verdict::True);
    let kernels = quadratic_kernels(&t, &p);
    let mut mismatched = Vec::new();
    let (mut commutativity, mut zero, mut squares_without) = (0, 0, 0);
    for (i, j, npaths, k) in &kernels {
        let brute = k.cols();
        if brute != p.relation_counts[*i][*j] {
            mismatched.push(format!("{i}->{j}: {brute} vs {}", p.relation_counts[*i][*j]));
        }
        let f0 = k.field();
        for c in 0..brute {
            let support = (0..k.rows()).filter(|&r| !f0.is_zero(k.get(r, c))).count();
            if support == 1 {
                zero += 1;
            } else {
                commutativity += 1;
            }
        }
        if *npaths >= 2 && (brute == 0 || (0..brute).all(|c| (0..k.rows()).filter(|&r| !f0.is_zero(k.get(r, c))).count() < 2)) {
            squares_without += 1;
        }
    }
    let total: usize = p.relation_counts.iter().flatten().sum();
    let brute_total: usize = kernels.iter().map(|k| k.3.cols()).sum();
    facts.check("relation counts match brute-force kernels", mismatched.is_empty(), mismatched.join("; "));
    facts.eq("all minimal relations are quadratic", total, brute_total);
    facts.eq("squares without commutativity relation", squares_without, 0);
    facts.check("relation kinds", commutativity > 0 && zero > 0, format!("{commutativity} commutativity, {zero} zero"));
    Ok(())
}

pub(crate) fn classification(facts: &mut Facts) -> Result<()> {
    let f = PrimeField::default();
    for e in classification_corpus(&f)? {
        let r = is_n_rep_finite(&e.algebra, 2, DEFAULT_TAU_CAP)?;
        facts.eq(format!("{} is 2-representation-finite", e.name), r.verdict, Verdict::True);
        let (_, p) = presented(&e.algebra, 2)?;
        facts.eq(format!("{} has self-injective preprojective algebra", e.name), is_self_injective(&p.algebra).verdict, Verdict::True);
    }
    for e in full_corpus(&f)?.into_iter().filter(|e| e.n == 2) {
        let r = is_n_rep_finite(&e.algebra, 2, DEFAULT_TAU_CAP)?.verdict;
        let (_, p) = presented(&e.algebra, 2)?;
        let s = is_self_injective(&p.algebra).verdict;
        facts.check(format!("{}: self-injectivity agrees with 2-representation-finiteness", e.name), r != Verdict::Unknown && r == s, format!("{r} / {s}"));
    }
    Ok(())
}

pub(crate) fn canonical(facts: &mut Facts) -> Result<()> {
    let f = PrimeField::default();
    let mut dims = Vec::new();
    for e in canonical_corpus(&f)? {
        facts.eq(format!("{} gldim", e.name), gldim_or_none(&e.algebra, 4)?, Some(2));
        facts.eq(format!("{} is 2-representation-finite", e.name), is_n_rep_finite(&e.algebra, 2, DEFAULT_TAU_CAP)?.verdict, Verdict::True);
        dims.push(preprojective_module(&e.algebra, 2, DEFAULT_TAU_CAP)?.dim());
    }
    facts.check("preprojective dimension is independent of lambda", dims.windows(2).all(|w| w[0] == w[1]), format!("{dims:?}"));
    Ok(())
}

pub(crate) fn cross_validation(facts: &mut Facts) -> Result<()> {
    let f = PrimeField::default();
    for e in full_corpus(&f)? {
        let tensor = preprojective_algebra(&e.algebra, e.n, DEFAULT_TAU_CAP)?.algebra.dim();
        let module = preprojective_module(&e.algebra, e.n, DEFAULT_TAU_CAP)?.dim();
        let reg = ProjComplex::regular(&e.algebra).to_complex();
        let orbit = amiot_hom(e.n, &reg, &reg, DEFAULT_WINDOW_CAP)?.total();
        facts.check(format!("{}: tensor = module = orbit sum", e.name), tensor == module && module == orbit, format!("{tensor} / {module} / {orbit}"));
        if e.name == "kA2" {
            facts.eq("kA2 common value", tensor, 4);
        }
    }
    Ok(())
}

pub(crate) fn homological_bounds(facts: &mut Facts) -> Result<()> {
    let f = PrimeField::default();
    let classification: Vec<String> = classification_corpus(&f)?.into_iter().map(|e| e.name).collect();
    for e in full_corpus(&f)? {
        let (g_end, g_gamma, gamma_dim) = end_and_gamma_gldims(&e.algebra, e.n)?;
        facts.check(format!("{}: gldim End <= n+1", e.name), g_end.is_some_and(|g| g <= e.n + 1), format!("{g_end:?}"));
        facts.check(format!("{}: gldim Gamma <= n+1", e.name), g_gamma.is_some_and(|g| g <= e.n + 1), format!("{g_gamma:?} (dim {gamma_dim})"));
        if e.n != 2 {
            continue;
        }
        let (_, p) = presented(&e.algebra, 2)?;
        let ig = iwanaga_gorenstein_dim(&p.algebra, DEFAULT_RESOLUTION_CAP)?;
        facts.check(format!("{}: IG dimension <= 1", e.name), ig <= 1, ig.to_string());
        if e.name.starts_with("auslander(A3") {
            facts.eq("Aus(A3) IG dimension", ig, 1);
        }
        if classification.contains(&e.name) {
            facts.eq(format!("{}: IG dimension", e.name), ig, 0);
        }
    }
    Ok(())
}

pub(crate) fn calabi_yau(facts: &mut Facts) -> Result<()> {
    let f = PrimeField::default();
    let (_, pi) = presented(&dynkin_path_algebra(&f, &[true])?, 1)?;
    facts.eq("Pi(A2), n = 1", cy_spot_check(&pi.algebra, 1)?, vec![true; 2]);
    let (_, nak) = presented(&linear_nakayama(&f, 3)?, 2)?;
    facts.eq("preprojective of linear_nakayama(3), n = 2", cy_spot_check(&nak.algebra, 2)?, vec![true; 3]);
    Ok(())
}

pub(crate) fn negative_controls(facts: &mut Facts) -> Result<()> {
    let f = PrimeField::default();
    let (_, pi) = presented(&dynkin_path_algebra(&f, &[true])?, 1)?;
    facts.eq("Pi(A2) is self-injective", is_self_injective(&pi.algebra).verdict, Verdict::True);
    let a = auslander_a3_nonlinear(&f)?;
    let (_, p) = presented(&a, 2)?;
    facts.eq("Aus(A3) preprojective algebra is not self-injective", is_self_injective(&p.algebra).verdict, Verdict::False);
    facts.eq("Aus(A3) is not 2-representation-finite", is_n_rep_finite(&a, 2, DEFAULT_TAU_CAP)?.verdict, Verdict::False);
    for e in full_corpus(&f)? {
        if gldim_or_none(&e.algebra, 3)?.is_none_or(|g| g > 2) || !is_tau_n_finite(&e.algebra, 2, DEFAULT_TAU_CAP)?.verdict.is_true() {
            continue;
        }
        facts.eq(format!("{}: vosnex at n = 2", e.name), vosnex(&e.algebra, 2, DEFAULT_WINDOW_CAP)?.verdict, Verdict::True);
    }
    Ok(())
}
