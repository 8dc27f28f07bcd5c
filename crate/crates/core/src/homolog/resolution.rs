use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::field::Field;
use crate::quivalg::Algebra;
use crate::repmod::{
    check_same, hom_dim, injective_envelope, lift_through, projective_cover, ModuleMap, ProjMap, Representation,
};

/// Default bound on resolution length.
pub const DEFAULT_RESOLUTION_CAP: usize = 32;

/// Minimal projective resolution `… -> P_1 -> P_0 -> M -> 0`.
#[derive(Clone, Debug)]
pub struct ProjResolution<F: Field> {
    pub module: Representation<F>,
    /// Vertices of the indecomposable summands of each term.
    pub vertices: Vec<Vec<usize>>,
    pub terms: Vec<Representation<F>>,
    pub augmentation: ModuleMap<F>,
    /// `differentials[i]: P_{i+1} -> P_i`.
    pub differentials: Vec<ModuleMap<F>>,
    pub minimal: bool,
    /// The cap was reached with a nonzero kernel left over.
    pub truncated: bool,
}

impl<F: Field> ProjResolution<F> {
    /// Index of the last nonzero term, `None` for the zero module.
    pub fn length(&self) -> Option<usize> {
        self.terms.len().checked_sub(1)
    }

    /// Differential `P_{i+1} -> P_i` as a matrix of algebra elements.
    pub fn proj_map(&self, i: usize) -> ProjMap<F> {
        let a = self.module.algebra();
        ProjMap::from_module_map(a, &self.vertices[i + 1], &self.vertices[i], &self.differentials[i])
    }

    /// Whether every differential lands in the radical of its target.
    pub fn is_minimal(&self) -> bool {
        (0..self.differentials.len()).all(|i| self.proj_map(i).is_radical())
    }

    /// Exactness at every term and surjectivity of the augmentation.
    pub fn is_exact(&self) -> bool {
        if !self.augmentation.is_surjective() {
            return false;
        }
        let mut prev = &self.augmentation;
        for d in &self.differentials {
            if !prev.compose(d).is_zero() || d.rank() + prev.rank() != prev.source.dim() {
                return false;
            }
            prev = d;
        }
        self.truncated || prev.is_injective()
    }
}

pub fn min_proj_resolution<F: Field>(m: &Representation<F>, length_cap: usize) -> ProjResolution<F> {
    let cover = projective_cover(m);
    let mut vertices = vec![];
    let mut terms = vec![];
    let mut differentials = vec![];
    let augmentation = cover.map.clone();
    if m.is_zero() {
        return ProjResolution { module: m.clone(), vertices, terms, augmentation, differentials, minimal: true, truncated: false };
    }
    vertices.push(cover.vertices.clone());
    terms.push(cover.map.source.clone());
    let mut prev = cover.map;
    let mut truncated = false;
    loop {
        let (k, inc) = prev.kernel();
        if k.is_zero() {
            break;
        }
        if terms.len() > length_cap {
            truncated = true;
            break;
        }
        let c = projective_cover(&k);
        let d = inc.compose(&c.map);
        vertices.push(c.vertices);
        terms.push(d.source.clone());
        differentials.push(d.clone());
        prev = d;
    }
    ProjResolution { module: m.clone(), vertices, terms, augmentation, differentials, minimal: true, truncated }
}

/// Components `f_i: P_i -> P'_i` of a chain map over `f: M -> M'`, for
/// `i ≤ upto`, between the given resolutions.
pub fn lift_chain_map<F: Field>(
    f: &ModuleMap<F>,
    r: &ProjResolution<F>,
    r2: &ProjResolution<F>,
    upto: usize,
) -> Vec<ModuleMap<F>> {
    let a = r.module.algebra();
    let mut out: Vec<ModuleMap<F>> = Vec::new();
    for i in 0..=upto.min(r.terms.len().saturating_sub(1)) {
        if r.terms.is_empty() {
            break;
        }
        let (g, s) = if i == 0 {
            (f.compose(&r.augmentation), &r2.augmentation)
        } else {
            if i > r2.differentials.len() {
                let z = Representation::zero(a);
                out.push(ModuleMap::zero(&r.terms[i], &z));
                continue;
            }
            (out[i - 1].compose(&r.differentials[i - 1]), &r2.differentials[i - 1])
        };
        if i > 0 && out[i - 1].target.is_zero() {
            out.push(ModuleMap::zero(&r.terms[i], &s.source));
            continue;
        }
        out.push(lift_through(a, &r.vertices[i], &g, s));
    }
    out
}

/// Projective dimension, or `AboveCap`.
pub fn projective_dimension<F: Field>(m: &Representation<F>, cap: usize) -> Result<usize> {
    let r = min_proj_resolution(m, cap);
    if r.truncated {
        Err(Error::AboveCap { cap })
    } else {
        Ok(r.length().unwrap_or(0))
    }
}

/// Injective dimension, computed as the projective dimension of `D M`.
pub fn injective_dimension<F: Field>(m: &Representation<F>, cap: usize) -> Result<usize> {
    projective_dimension(&m.dual(), cap)
}

pub fn global_dimension<F: Field>(a: &Algebra<F>, cap: usize) -> Result<usize> {
    let mut best = 0;
    for v in 0..a.num_vertices() {
        best = best.max(projective_dimension(&Representation::simple(a, v), cap)?);
    }
    Ok(best)
}

fn omega<F: Field>(m: &Representation<F>) -> Representation<F> {
    projective_cover(m).map.kernel().0
}

fn omega_inv<F: Field>(m: &Representation<F>) -> Representation<F> {
    injective_envelope(m).map.cokernel().0
}

/// `Ω^i M` for `i > 0`, the cosyzygy `Ω^{-|i|} M` for `i < 0`, `M` for `i = 0`.
pub fn syzygy<F: Field>(m: &Representation<F>, i: i64) -> Representation<F> {
    let mut cur = m.clone();
    for _ in 0..i.unsigned_abs() {
        if cur.is_zero() {
            break;
        }
        cur = if i > 0 { omega(&cur) } else { omega_inv(&cur) };
    }
    cur
}

/// Matrix of `Hom(P_i, N) -> Hom(P_{i+1}, N)` with `Hom(P_v, N) = N_v`.
pub(crate) fn hom_differential<F: Field>(pm: &ProjMap<F>, n: &Representation<F>) -> Matrix<F> {
    let f = n.field();
    let d = n.dims();
    let rows: usize = pm.source.iter().map(|&v| d[v]).sum();
    let cols: usize = pm.target.iter().map(|&v| d[v]).sum();
    let mut out = Matrix::zeros(f, rows, cols);
    let mut r0 = 0;
    for (g, &s) in pm.source.iter().enumerate() {
        let mut c0 = 0;
        for (h, &t) in pm.target.iter().enumerate() {
            let x = &pm.entries[h][g];
            if d[s] > 0 && d[t] > 0 && x.iter().any(|c| !f.is_zero(c)) {
                let act = n.element_action(x);
                out.set_block(r0, c0, &act.block(n.offset(s), n.offset(t), d[s], d[t]));
            }
            c0 += d[t];
        }
        r0 += d[s];
    }
    out
}

/// `dim Ext^i(M, N)`.
pub fn ext<F: Field>(m: &Representation<F>, n: &Representation<F>, i: usize) -> Result<usize> {
    check_same(m, n)?;
    if i == 0 {
        return hom_dim(m, n);
    }
    let r = min_proj_resolution(m, i + 1);
    ext_from_resolution(&r, n, i)
}

/// `dim Ext^i(M, N)` from a resolution of `M` of length at least `i + 1`
/// (or a complete one).
pub fn ext_from_resolution<F: Field>(r: &ProjResolution<F>, n: &Representation<F>, i: usize) -> Result<usize> {
    if i == 0 {
        return hom_dim(&r.module, n);
    }
    let len = match r.length() {
        None => return Ok(0),
        Some(l) => l,
    };
    if i > len {
        return Ok(0);
    }
    let homdim: usize = r.vertices[i].iter().map(|&v| n.dims()[v]).sum();
    let ker = if i < r.differentials.len() {
        homdim - hom_differential(&r.proj_map(i), n).rank()
    } else if r.truncated && i >= r.differentials.len() {
        return Err(Error::AboveCap { cap: r.differentials.len() });
    } else {
        homdim
    };
    let img = hom_differential(&r.proj_map(i - 1), n).rank();
    Ok(ker - img)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::quivalg::algebra_from_strings;

    fn a2() -> Algebra<Rationals> {
        algebra_from_strings(&Rationals, &["1", "2"], &[("a", "1", "2")], &[]).unwrap()
    }

    fn a3_rel() -> Algebra<Rationals> {
        algebra_from_strings(&Rationals, &["1", "2", "3"], &[("a1", "1", "2"), ("a2", "2", "3")], &["a1*a2"]).unwrap()
    }

    #[test]
    fn resolutions_of_simples() {
        let a = a2();
        let r = min_proj_resolution(&Representation::simple(&a, 0), 8);
        assert_eq!(r.vertices, vec![vec![0], vec![1]]);
        assert!(r.is_exact() && r.is_minimal());
        let a = a3_rel();
        let r = min_proj_resolution(&Representation::simple(&a, 0), 8);
        assert_eq!(r.vertices, vec![vec![0], vec![1], vec![2]]);
        assert!(r.is_exact() && r.is_minimal());
        let p = min_proj_resolution(&Representation::projective(&a, 1), 8);
        assert_eq!(p.length(), Some(0));
    }

    #[test]
    fn truncation_flag() {
        let a = a3_rel();
        let r = min_proj_resolution(&Representation::simple(&a, 0), 1);
        assert!(r.truncated);
        assert_eq!(projective_dimension(&Representation::simple(&a, 0), 1), Err(Error::AboveCap { cap: 1 }));
    }

    #[test]
    fn syzygies() {
        let a = a2();
        assert_eq!(syzygy(&Representation::simple(&a, 0), 1).dims(), &[0, 1]);
        assert!(syzygy(&Representation::projective(&a, 0), 1).is_zero());
        let a = a3_rel();
        assert_eq!(syzygy(&Representation::simple(&a, 2), -1).dims(), &[0, 1, 0]);
    }

    #[test]
    fn ext_groups() {
        let a = a3_rel();
        let s: Vec<_> = (0..3).map(|v| Representation::simple(&a, v)).collect();
        assert_eq!(ext(&s[0], &s[2], 2).unwrap(), 1);
        assert_eq!(ext(&s[0], &s[1], 1).unwrap(), 1);
        assert_eq!(ext(&s[0], &s[2], 1).unwrap(), 0);
        assert_eq!(ext(&s[0], &s[0], 0).unwrap(), 1);
        assert_eq!(ext(&Representation::projective(&a, 0), &s[1], 1).unwrap(), 0);
        assert_eq!(global_dimension(&a, 8).unwrap(), 2);
        assert_eq!(global_dimension(&a2(), 8).unwrap(), 1);
        assert_eq!(injective_dimension(&Representation::injective(&a, 0), 8).unwrap(), 0);
    }
}
