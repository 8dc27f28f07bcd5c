use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::acceptance::{auslander_a3_nonlinear, Facts};
use crate::derived::{
    hom_d, nakayama_proj, proj_resolve_complex, proj_resolve_complex_with_map, serre_n_power, ComplexOfModules,
};
use crate::error::Result;
use crate::families::{dynkin_path_algebra, linear_nakayama};
use crate::field::{Field, PrimeField};
use crate::homolog::{ext, tau_n, tau_n_inv, DEFAULT_RESOLUTION_CAP};
use crate::quivalg::Algebra;
use crate::repmod::{hom_dim, hom_space, is_isomorphic, ModuleMap, ProjMap, Representation};

/// Cases per property.
pub const PROPERTY_CASES: usize = 200;

fn random_vertices<R: Rng>(a: &Algebra<PrimeField>, rng: &mut R, lo: usize, hi: usize) -> Vec<usize> {
    let k = rng.random_range(lo..=hi);
    (0..k).map(|_| rng.random_range(0..a.num_vertices())).collect()
}

/// A random map between sums of indecomposable projectives, with entries
/// random combinations of paths of positive length.
fn random_proj_map<R: Rng>(a: &Algebra<PrimeField>, rng: &mut R, source: Vec<usize>, target: Vec<usize>) -> ProjMap<PrimeField> {
    let f = a.field();
    let mut m = ProjMap::zero(a, source.clone(), target.clone());
    for (h, &t) in target.iter().enumerate() {
        for (g, &s) in source.iter().enumerate() {
            for &i in a.block(t, s) {
                if i != a.vertex_basis_index(s) && rng.random_bool(0.7) {
                    m.entries[h][g][i] = f.random(rng);
                }
            }
        }
    }
    m
}

/// A random module: a quotient, image or submodule cut out by a random map
/// between small sums of projectives, sometimes further divided by the image
/// of a random map from a projective. Never zero.
pub fn random_module<R: Rng>(a: &Algebra<PrimeField>, rng: &mut R) -> Representation<PrimeField> {
    loop {
        let target = random_vertices(a, rng, 1, 2);
        let source = random_vertices(a, rng, 0, 3);
        let m = random_proj_map(a, rng, source, target).to_module_map();
        let mut out = match rng.random_range(0..4) {
            0 | 1 => m.cokernel().0,
            2 => m.image().0,
            _ => m.kernel().0,
        };
        if !out.is_zero() && rng.random_bool(0.5) {
            let p = Representation::projective(a, rng.random_range(0..a.num_vertices()));
            if let Ok(g) = random_map(&p, &out, rng) {
                out = g.cokernel().0;
            }
        }
        if !out.is_zero() {
            return out;
        }
    }
}

fn random_map<R: Rng>(m: &Representation<PrimeField>, n: &Representation<PrimeField>, rng: &mut R) -> Result<ModuleMap<PrimeField>> {
    let f = m.field();
    let mut acc = ModuleMap::zero(m, n);
    for b in hom_space(m, n)? {
        acc = acc.add(&b.scale(&f.random(rng)));
    }
    Ok(acc)
}

struct Member {
    name: &'static str,
    algebra: Algebra<PrimeField>,
    /// `n` with `gldim ≤ n`.
    n: usize,
}

fn members(f: &PrimeField) -> Result<Vec<Member>> {
    Ok(vec![
        Member { name: "kA2", algebra: dynkin_path_algebra(f, &[true])?, n: 1 },
        Member { name: "kA3", algebra: dynkin_path_algebra(f, &[true, true])?, n: 1 },
        Member { name: "kA3 (1<-2->3)", algebra: dynkin_path_algebra(f, &[false, true])?, n: 1 },
        Member { name: "linear_nakayama(3)", algebra: linear_nakayama(f, 3)?, n: 2 },
        Member { name: "linear_nakayama(4)", algebra: linear_nakayama(f, 4)?, n: 2 },
        Member { name: "auslander(A3, 1<-2->3)", algebra: auslander_a3_nonlinear(f)?, n: 2 },
    ])
}

/// Record the first failing case of a property, or its case count.
fn summarize(facts: &mut Facts, label: &str, failures: Vec<String>, cases: usize) {
    let observed = match failures.first() {
        None => format!("{cases} cases"),
        Some(first) => format!("{} of {cases} cases failed, first: {first}", failures.len()),
    };
    facts.check(label, failures.is_empty() && cases >= PROPERTY_CASES, observed);
}

pub(crate) fn property_suites(facts: &mut Facts, seed: u64) -> Result<()> {
    let f = PrimeField::default();
    let ms = members(&f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pick = |rng: &mut ChaCha8Rng| &ms[rng.random_range(0..ms.len())];

    let mut failures = Vec::new();
    for case in 0..PROPERTY_CASES {
        let mb = pick(&mut rng);
        let (m, n) = (random_module(&mb.algebra, &mut rng), random_module(&mb.algebra, &mut rng));
        let g = random_map(&m, &n, &mut rng)?;
        let (k, _) = g.kernel();
        let (i, _) = g.image();
        let per_vertex = (0..m.dims().len()).all(|v| k.dims()[v] + i.dims()[v] == m.dims()[v]);
        let blocks = g.blocks.iter().all(|b| b.rank() + b.null_space().cols() == b.cols());
        if !(per_vertex && blocks) {
            failures.push(format!("case {case} over {}", mb.name));
        }
    }
    summarize(facts, "rank-nullity", failures, PROPERTY_CASES);

    let mut failures = Vec::new();
    for case in 0..PROPERTY_CASES {
        let mb = pick(&mut rng);
        let m = random_module(&mb.algebra, &mut rng);
        let v = rng.random_range(0..mb.algebra.num_vertices());
        let p = hom_dim(&Representation::projective(&mb.algebra, v), &m)?;
        let i = hom_dim(&m, &Representation::injective(&mb.algebra, v))?;
        if p != m.dims()[v] || i != m.dims()[v] {
            failures.push(format!("case {case} over {} at vertex {v}: {p}, {i} vs {}", mb.name, m.dims()[v]));
        }
    }
    summarize(facts, "Yoneda dimensions", failures, PROPERTY_CASES);

    let mut failures = Vec::new();
    for case in 0..PROPERTY_CASES {
        let mb = pick(&mut rng);
        let x = ComplexOfModules::concentrated(&random_module(&mb.algebra, &mut rng), 0);
        let y = ComplexOfModules::concentrated(&random_module(&mb.algebra, &mut rng), 0);
        let nu_x = nakayama_proj(&proj_resolve_complex(&x)?);
        for j in 0..=mb.n as i64 {
            let lhs = hom_d(&x, &y, j)?;
            let rhs = hom_d(&y, &nu_x, -j)?;
            if lhs != rhs {
                failures.push(format!("case {case} over {}, degree {j}: {lhs} vs {rhs}", mb.name));
                break;
            }
        }
    }
    summarize(facts, "Serre duality dimensions", failures, PROPERTY_CASES);

    let mut failures = Vec::new();
    for case in 0..PROPERTY_CASES {
        let mb = pick(&mut rng);
        let m = random_module(&mb.algebra, &mut rng);
        let x = ComplexOfModules::concentrated(&m, 0);
        let plus = serre_n_power(&x, mb.n, 1)?.cohomology(0);
        let minus = serre_n_power(&x, mb.n, -1)?.cohomology(0);
        if !is_isomorphic(&plus, &tau_n(&m, mb.n)?)? || !is_isomorphic(&minus, &tau_n_inv(&m, mb.n)?)? {
            failures.push(format!("case {case} over {}", mb.name));
        }
    }
    summarize(facts, "H^0 of Serre powers gives tau_n", failures, PROPERTY_CASES);

    let mut failures = Vec::new();
    for case in 0..PROPERTY_CASES {
        let mb = pick(&mut rng);
        let m = random_module(&mb.algebra, &mut rng);
        let x = ComplexOfModules::concentrated(&m, 0);
        let r = proj_resolve_complex_with_map(&x, DEFAULT_RESOLUTION_CAP)?;
        let reduced = r.complex.reduce();
        let e = rng.random_range(-2..=2);
        let s = serre_n_power(&x, mb.n, e)?;
        let back = serre_n_power(&s, mb.n, -e)?;
        let ok = r.complex.is_complex()
            && r.is_quasi_isomorphism(&x)
            && reduced.is_complex()
            && reduced.is_minimal()
            && reduced.to_complex().cohomology_dims() == x.cohomology_dims()
            && s.is_complex()
            && back.is_complex()
            && back.cohomology_support() == Some((0, 0))
            && is_isomorphic(&back.cohomology(0), &m)?
            && s.dual().is_complex()
            && s.shift(1).is_complex();
        if !ok {
            failures.push(format!("case {case} over {} with power {e}", mb.name));
        }
    }
    summarize(facts, "complexes and quasi-isomorphisms", failures, PROPERTY_CASES);

    // Ext from resolutions against the derived Hom
    let mut failures = Vec::new();
    for case in 0..PROPERTY_CASES {
        let mb = pick(&mut rng);
        let (m, n) = (random_module(&mb.algebra, &mut rng), random_module(&mb.algebra, &mut rng));
        let x = ComplexOfModules::concentrated(&m, 0);
        let y = ComplexOfModules::concentrated(&n, 0);
        for j in 0..=mb.n {
            if ext(&m, &n, j)? != hom_d(&x, &y, j as i64)? {
                failures.push(format!("case {case} over {}, degree {j}", mb.name));
                break;
            }
        }
    }
    summarize(facts, "Ext agrees with derived Hom", failures, PROPERTY_CASES);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmod::{is_injective_module, is_projective_module};

    #[test]
    fn random_modules_are_varied() {
        let f = PrimeField::default();
        let a = auslander_a3_nonlinear(&f).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let ms: Vec<_> = (0..100).map(|_| random_module(&a, &mut rng)).collect();
        let plain = ms.iter().filter(|m| !is_projective_module(m) && !is_injective_module(m)).count();
        assert!(plain > 20, "{plain}");
        assert!(ms.iter().map(Representation::dim).max().unwrap() >= 6);
        let mut dims: Vec<Vec<usize>> = ms.iter().map(|m| m.dims().to_vec()).collect();
        dims.sort();
        dims.dedup();
        assert!(dims.len() > 15, "{}", dims.len());
    }
}
