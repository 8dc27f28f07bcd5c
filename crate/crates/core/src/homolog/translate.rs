use crate::error::Result;
use crate::field::Field;
use crate::homolog::resolution::syzygy;
use crate::repmod::{projective_cover, strip_summands, top_dims, ProjMap, Representation};

/// Drop projective direct summands. Summand candidates are filtered by top
/// and dimension vector before any decomposition is attempted.
pub fn strip_projectives<F: Field>(m: &Representation<F>) -> Result<Representation<F>> {
    let a = m.algebra();
    let top = top_dims(m);
    let candidates: Vec<Representation<F>> = (0..a.num_vertices())
        .filter(|&v| top[v] > 0)
        .map(|v| Representation::projective(a, v))
        .filter(|p| p.dims().iter().zip(m.dims()).all(|(x, y)| x <= y))
        .collect();
    if candidates.is_empty() {
        return Ok(m.clone());
    }
    strip_summands(m, &candidates)
}

/// Drop injective direct summands.
pub fn strip_injectives<F: Field>(m: &Representation<F>) -> Result<Representation<F>> {
    Ok(strip_projectives(&m.dual())?.dual())
}

/// `Tr M`, a module over the opposite algebra, from a minimal presentation of
/// the projective-free part of `M`.
pub fn transpose<F: Field>(m: &Representation<F>) -> Result<Representation<F>> {
    let m = strip_projectives(m)?;
    let a = m.algebra();
    if m.is_zero() {
        return Ok(Representation::zero(&a.opposite()));
    }
    let c0 = projective_cover(&m);
    let (k, inc) = c0.map.kernel();
    let c1 = projective_cover(&k);
    let d1 = inc.compose(&c1.map);
    let pm = ProjMap::from_module_map(a, &c1.vertices, &c0.vertices, &d1);
    Ok(pm.transpose().to_module_map().cokernel().0)
}

/// `τ = D Tr`.
pub fn tau<F: Field>(m: &Representation<F>) -> Result<Representation<F>> {
    Ok(transpose(m)?.dual())
}

/// `τ⁻ = Tr D`.
pub fn tau_inv<F: Field>(m: &Representation<F>) -> Result<Representation<F>> {
    transpose(&m.dual())
}

/// `τ_n = τ Ω^{n-1}`.
pub fn tau_n<F: Field>(m: &Representation<F>, n: usize) -> Result<Representation<F>> {
    assert!(n >= 1, "n must be positive");
    tau(&syzygy(m, n as i64 - 1))
}

/// `τ_n⁻ = τ⁻ Ω^{-(n-1)}`.
pub fn tau_n_inv<F: Field>(m: &Representation<F>, n: usize) -> Result<Representation<F>> {
    assert!(n >= 1, "n must be positive");
    tau_inv(&syzygy(m, -(n as i64 - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::quivalg::{algebra_from_strings, Algebra};
    use crate::repmod::is_isomorphic;
    use std::sync::Arc;

    fn a2() -> Algebra<Rationals> {
        algebra_from_strings(&Rationals, &["1", "2"], &[("a", "1", "2")], &[]).unwrap()
    }

    fn a3_rel() -> Algebra<Rationals> {
        algebra_from_strings(&Rationals, &["1", "2", "3"], &[("a1", "1", "2"), ("a2", "2", "3")], &["a1*a2"]).unwrap()
    }

    #[test]
    fn transpose_over_a2() {
        let a = a2();
        let t = transpose(&Representation::simple(&a, 0)).unwrap();
        assert!(Arc::ptr_eq(t.algebra(), &a.opposite()));
        assert_eq!(t.dims(), &[0, 1]);
        assert!(transpose(&Representation::projective(&a, 0)).unwrap().is_zero());
        let ts = tau(&Representation::simple(&a, 0)).unwrap();
        assert!(is_isomorphic(&ts, &Representation::simple(&a, 1)).unwrap());
    }

    #[test]
    fn translates_over_nakayama() {
        let a = a3_rel();
        let s2 = Representation::simple(&a, 1);
        assert!(is_isomorphic(&tau_inv(&s2).unwrap(), &Representation::simple(&a, 0)).unwrap());
        assert!(tau_inv(&Representation::injective(&a, 0)).unwrap().is_zero());
        assert!(tau(&Representation::projective(&a, 2)).unwrap().is_zero());
        let t = tau_n_inv(&Representation::projective(&a, 2), 2).unwrap();
        assert!(is_isomorphic(&t, &Representation::simple(&a, 0)).unwrap());
        let m = Representation::simple(&a, 0);
        assert!(is_isomorphic(&tau_n(&m, 1).unwrap(), &tau(&m).unwrap()).unwrap());
        assert!(is_isomorphic(&tau(&tau_inv(&s2).unwrap()).unwrap(), &s2).unwrap());
    }
}
