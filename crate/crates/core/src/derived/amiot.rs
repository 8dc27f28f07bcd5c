use std::collections::BTreeMap;

use crate::derived::complex::ComplexOfModules;
use crate::derived::functors::{hom_from_projective, proj_resolve_complex, serre_n_inv_step, serre_n_step};
use crate::derived::projcomplex::ProjComplex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::quivalg::Algebra;

/// Default bound on orbit-scan iterations in each direction.
pub const DEFAULT_WINDOW_CAP: usize = 64;

/// `⊕_i Hom_D(X, 𝕊_n^{-i} Y)`, recorded by its nonzero pieces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedHom {
    pub pieces: BTreeMap<i64, usize>,
    /// Orbit indices actually examined.
    pub scanned: Option<(i64, i64)>,
}

impl GradedHom {
    pub fn total(&self) -> usize {
        self.pieces.values().sum()
    }

    /// Dimensions for `i = 0, 1, …` up to the last nonzero piece.
    pub fn nonnegative_dims(&self) -> Vec<usize> {
        let top = self.pieces.keys().copied().filter(|&i| i >= 0).max();
        match top {
            None => Vec::new(),
            Some(t) => (0..=t).map(|i| self.pieces.get(&i).copied().unwrap_or(0)).collect(),
        }
    }
}

/// Projective models of `𝕊_n^i P_v`, keyed by `(i, v)`. The cache is a plain
/// value: callers pass it in and get the extended cache back.
#[derive(Clone, Debug)]
pub struct UCache<F: Field> {
    pub n: usize,
    entries: BTreeMap<(i64, usize), ProjComplex<F>>,
}

impl<F: Field> UCache<F> {
    pub fn new(n: usize) -> Self {
        UCache { n, entries: BTreeMap::new() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn get(&mut self, a: &Algebra<F>, i: i64, v: usize) -> Result<ProjComplex<F>> {
        if let Some(c) = self.entries.get(&(i, v)) {
            return Ok(c.clone());
        }
        let c = if i == 0 {
            ProjComplex::indecomposable_projective(a, v)
        } else if i > 0 {
            let prev = self.get(a, i - 1, v)?;
            serre_n_step(&prev, self.n)?
        } else {
            let prev = self.get(a, i + 1, v)?;
            serre_n_inv_step(&prev.to_complex(), self.n)?
        };
        self.entries.insert((i, v), c.clone());
        Ok(c)
    }
}

/// The object `𝕊_n^power P_vertex` of `U`.
#[derive(Clone, Debug)]
pub struct WindowObject<F: Field> {
    pub power: i64,
    pub vertex: usize,
    pub complex: ComplexOfModules<F>,
    /// Non-positive powers stay in `D^{≤0}`, non-negative powers in `D^{≥0}`.
    pub containment_holds: bool,
}

impl<F: Field> WindowObject<F> {
    /// Cohomology concentrated in degree 0.
    pub fn is_module(&self) -> bool {
        matches!(self.complex.cohomology_support(), Some((0, 0)))
    }
}

/// `𝕊_n^i Λ` for `i ∈ [lo, hi]`, one indecomposable object per vertex.
pub fn u_window<F: Field>(
    a: &Algebra<F>,
    lo: i64,
    hi: i64,
    mut cache: UCache<F>,
) -> Result<(Vec<WindowObject<F>>, UCache<F>)> {
    let mut out = Vec::new();
    for i in lo..=hi {
        for v in 0..a.num_vertices() {
            let complex = cache.get(a, i, v)?.to_complex();
            let containment_holds = match complex.cohomology_support() {
                None => true,
                Some((l, h)) => (i > 0 || h <= 0) && (i < 0 || l >= 0),
            };
            out.push(WindowObject { power: i, vertex: v, complex, containment_holds });
        }
    }
    Ok((out, cache))
}

/// Orbit sum `⊕_i Hom_D(X, 𝕊_n^{-i} Y)`. With `X` resolved in degrees
/// `[p, q]`, a piece vanishes once the cohomology of the iterate lies below
/// `p` (scanning `i > 0`) or above `q` (scanning `i < 0`); both conditions
/// persist under further iteration, so the scan stops there.
pub fn amiot_hom<F: Field>(
    n: usize,
    x: &ComplexOfModules<F>,
    y: &ComplexOfModules<F>,
    window_cap: usize,
) -> Result<GradedHom> {
    if !x.algebra().same_as(y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let px = proj_resolve_complex(x)?;
    let py = proj_resolve_complex(y)?;
    let mut out = GradedHom::default();
    if px.is_zero() || py.is_zero() {
        return Ok(out);
    }
    let (p, q) = (px.lo, px.hi());
    let record = |i: i64, z: &ComplexOfModules<F>, out: &mut GradedHom| {
        let d = hom_from_projective(&px, z, 0);
        if d > 0 {
            out.pieces.insert(i, d);
        }
        out.scanned = Some(match out.scanned {
            None => (i, i),
            Some((l, h)) => (l.min(i), h.max(i)),
        });
    };
    // i ≥ 0: 𝕊_n^{-i} Y
    let mut cur = py.clone();
    let mut i = 0;
    loop {
        let z = cur.to_complex();
        match z.cohomology_support() {
            Some((_, h)) if h >= p => record(i, &z, &mut out),
            _ => break,
        }
        if i as usize >= window_cap {
            return Err(Error::WindowInconclusive { cap: window_cap });
        }
        i += 1;
        cur = serre_n_inv_step(&z, n)?;
    }
    // i < 0: 𝕊_n^{|i|} Y
    let mut cur = py;
    let mut i = 0;
    loop {
        if (-i) as usize >= window_cap {
            return Err(Error::WindowInconclusive { cap: window_cap });
        }
        i -= 1;
        cur = serre_n_step(&cur, n)?;
        let z = cur.to_complex();
        match z.cohomology_support() {
            Some((l, _)) if l <= q => record(i, &z, &mut out),
            _ => break,
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::quivalg::algebra_from_strings;
    use crate::repmod::{is_isomorphic, Representation};

    fn regular(a: &Algebra<Rationals>) -> ComplexOfModules<Rationals> {
        ProjComplex::regular(a).to_complex()
    }

    #[test]
    fn a2_orbit_sum() {
        let a = algebra_from_strings(&Rationals, &["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        let l = regular(&a);
        let h = amiot_hom(1, &l, &l, 16).unwrap();
        assert_eq!(h.total(), 4);
        assert_eq!(h.nonnegative_dims(), vec![3, 1]);
        let z = ComplexOfModules::zero(&a);
        assert_eq!(amiot_hom(1, &z, &l, 16).unwrap().total(), 0);
        let (objs, cache) = u_window(&a, -2, 0, UCache::new(1)).unwrap();
        assert!(objs.iter().all(|o| o.containment_holds));
        assert!(objs.iter().any(|o| o.is_module() && is_isomorphic(&o.complex.cohomology(0), &Representation::simple(&a, 0)).unwrap()));
        assert_eq!(cache.len(), 6);
        let (objs, _) = u_window(&a, 0, 0, cache).unwrap();
        assert_eq!(objs.len(), 2);
    }

    #[test]
    fn nakayama_orbit_sum() {
        let a = algebra_from_strings(&Rationals, &["1", "2", "3"], &[("a1", "1", "2"), ("a2", "2", "3")], &["a1*a2"]).unwrap();
        let l = regular(&a);
        assert_eq!(amiot_hom(2, &l, &l, 16).unwrap().total(), 6);
    }
}
