use serde::{Deserialize, Serialize};

use crate::derived::{nakayama, serre_n_power, u_window, ComplexOfModules, UCache};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homolog::{ext, global_dimension, injective_dimension, min_proj_resolution, strip_projectives, syzygy, tau_n_inv};
use crate::quivalg::Algebra;
use crate::repmod::{is_isomorphic, is_projective_module, socle_dims, top_dims, Representation};

/// Three-valued outcome; `Unknown` is reported whenever a cap was hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Unknown => "unknown",
        })
    }
}

/// Global dimension, `None` when above the cap.
pub fn gldim_or_none<F: Field>(a: &Algebra<F>, cap: usize) -> Result<Option<usize>> {
    match global_dimension(a, cap) {
        Ok(g) => Ok(Some(g)),
        Err(Error::AboveCap { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn require_gldim<F: Field>(a: &Algebra<F>, n: usize) -> Result<()> {
    match gldim_or_none(a, n + 1)? {
        Some(g) if g <= n => Ok(()),
        g => Err(Error::GldimTooLarge { gldim: g.unwrap_or(n + 2), n }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauFiniteness {
    pub verdict: Verdict,
    /// Smallest `i` with `τ_n^{-i} Λ = 0`.
    pub vanishing_index: Option<usize>,
    /// `dim τ_n^{-i} Λ` for the iterates computed.
    pub trace: Vec<usize>,
}

pub fn is_tau_n_finite<F: Field>(a: &Algebra<F>, n: usize, cap: usize) -> Result<TauFiniteness> {
    require_gldim(a, n)?;
    let mut cur: Vec<Representation<F>> = (0..a.num_vertices()).map(|v| Representation::projective(a, v)).collect();
    let mut trace = Vec::new();
    for i in 0..=cap {
        let d: usize = cur.iter().map(Representation::dim).sum();
        if d == 0 {
            return Ok(TauFiniteness { verdict: Verdict::True, vanishing_index: Some(i), trace });
        }
        trace.push(d);
        cur = cur.iter().filter(|m| !m.is_zero()).map(|m| tau_n_inv(m, n)).collect::<Result<_>>()?;
    }
    Ok(TauFiniteness { verdict: Verdict::Unknown, vanishing_index: None, trace })
}

/// How the injective `I_v` was reached from a projective.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectiveWitness {
    pub vertex: usize,
    /// `ℓ` with `𝕊_n^ℓ I_v ≅ P_{projective_vertex}`.
    pub ell: Option<usize>,
    pub projective_vertex: Option<usize>,
    /// Dimension vectors of `𝕊_n^k I_v`, `k = 0..`, while they stay modules.
    pub chain: Vec<Vec<usize>>,
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NRepFiniteness {
    pub verdict: Verdict,
    pub gldim: Option<usize>,
    pub witnesses: Vec<InjectiveWitness>,
}

/// `DΛ ∈ U` test: each `I_v` must reach a projective module under `𝕊_n`
/// while every iterate stays a module.
pub fn is_n_rep_finite<F: Field>(a: &Algebra<F>, n: usize, cap: usize) -> Result<NRepFiniteness> {
    let gldim = gldim_or_none(a, n + 1)?;
    if gldim.is_none_or(|g| g > n) {
        return Ok(NRepFiniteness { verdict: Verdict::False, gldim, witnesses: Vec::new() });
    }
    let mut witnesses = Vec::new();
    let mut verdict = Verdict::True;
    for v in 0..a.num_vertices() {
        let mut m = Representation::injective(a, v);
        let mut w = InjectiveWitness { vertex: v, ell: None, projective_vertex: None, chain: Vec::new(), failure: None };
        let mut done = false;
        for ell in 0..=cap {
            w.chain.push(m.dims().to_vec());
            if is_projective_module(&m) {
                w.ell = Some(ell);
                w.projective_vertex = top_dims(&m).iter().position(|&t| t > 0);
                done = true;
                break;
            }
            let s = serre_n_power(&ComplexOfModules::concentrated(&m, 0), n, 1)?;
            match s.cohomology_support() {
                Some((0, 0)) => m = s.cohomology(0),
                None => {
                    w.failure = Some(format!("iterate {} vanishes", ell + 1));
                    done = true;
                    break;
                }
                Some((l, h)) => {
                    w.failure = Some(format!("iterate {} has cohomology in degrees {l}..{h}", ell + 1));
                    done = true;
                    break;
                }
            }
        }
        if w.failure.is_some() {
            verdict = Verdict::False;
        } else if !done && verdict == Verdict::True {
            verdict = Verdict::Unknown;
        }
        witnesses.push(w);
    }
    Ok(NRepFiniteness { verdict, gldim, witnesses })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfInjectivity {
    pub verdict: Verdict,
    /// `v ↦` socle vertex of `P_v`, when every projective is injective.
    pub nakayama_permutation: Option<Vec<usize>>,
    /// First vertex whose projective is not injective.
    pub counterexample: Option<usize>,
}

pub fn is_self_injective<F: Field>(b: &Algebra<F>) -> SelfInjectivity {
    let mut perm = Vec::new();
    for v in 0..b.num_vertices() {
        let p = Representation::projective(b, v);
        let soc = socle_dims(&p);
        let simple_socle = soc.iter().sum::<usize>() == 1;
        let w = soc.iter().position(|&d| d > 0).unwrap_or(0);
        if !simple_socle || Representation::injective(b, w).dims() != p.dims() {
            return SelfInjectivity { verdict: Verdict::False, nakayama_permutation: None, counterexample: Some(v) };
        }
        perm.push(w);
    }
    SelfInjectivity { verdict: Verdict::True, nakayama_permutation: Some(perm), counterexample: None }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VosnexReport {
    pub verdict: Verdict,
    /// `(i, d)` with `H^{-i}(𝕊_n^d Λ) ≠ 0`.
    pub first_violation: Option<(usize, i64)>,
    /// Orbit indices examined; empty when the condition is vacuous.
    pub scanned: Vec<i64>,
}

/// `H^{-i}(𝕊_n^d Λ) = 0` for `1 ≤ i ≤ n-2` over all `d`. Positive powers
/// stay in `D^{≥0}`, so only `d ≤ 0` is scanned, until the cohomology lies
/// below degree `2-n`.
pub fn vosnex<F: Field>(a: &Algebra<F>, n: usize, window_cap: usize) -> Result<VosnexReport> {
    if n <= 2 {
        return Ok(VosnexReport { verdict: Verdict::True, first_violation: None, scanned: Vec::new() });
    }
    require_gldim(a, n)?;
    let mut cache = UCache::new(n);
    let mut scanned = Vec::new();
    for k in 0..=window_cap as i64 {
        let d = -k;
        let (objs, c) = u_window(a, d, d, cache)?;
        cache = c;
        scanned.push(d);
        let mut all_below = true;
        for o in &objs {
            for i in 1..=n - 2 {
                if o.complex.cohomology_dim_vector(-(i as i64)).iter().any(|&x| x > 0) {
                    return Ok(VosnexReport { verdict: Verdict::False, first_violation: Some((i, d)), scanned });
                }
            }
            if let Some((_, h)) = o.complex.cohomology_support() {
                if h >= 2 - n as i64 {
                    all_below = false;
                }
            }
        }
        if all_below {
            return Ok(VosnexReport { verdict: Verdict::True, first_violation: None, scanned });
        }
    }
    Ok(VosnexReport { verdict: Verdict::Unknown, first_violation: None, scanned })
}

/// Largest injective dimension of the regular module on either side.
pub fn iwanaga_gorenstein_dim<F: Field>(b: &Algebra<F>, cap: usize) -> Result<usize> {
    let op = b.opposite();
    let mut best = 0;
    for v in 0..b.num_vertices() {
        best = best.max(injective_dimension(&Representation::projective(b, v), cap)?);
        best = best.max(injective_dimension(&Representation::projective(&op, v), cap)?);
    }
    Ok(best)
}

/// `Ext^i(X, B) = 0` for `1 ≤ i ≤ d`, with `d` the Iwanaga–Gorenstein dimension.
pub fn is_cm<F: Field>(x: &Representation<F>, ig_dim: usize) -> Result<bool> {
    let b = x.algebra();
    for v in 0..b.num_vertices() {
        let p = Representation::projective(b, v);
        for i in 1..=ig_dim {
            if ext(x, &p, i)? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Ext^i(M, M) = 0` for `0 < i < n`.
pub fn rigidity<F: Field>(m: &Representation<F>, n: usize) -> Result<bool> {
    for i in 1..n {
        if ext(m, m, i)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ν M = H^0(ν P)` for a projective presentation `P_1 -> P_0`; `ν` is
/// right exact, so the presentation suffices even when `pd M = ∞`.
pub fn nakayama_module<F: Field>(m: &Representation<F>) -> Result<Representation<F>> {
    let r = min_proj_resolution(m, 1);
    let x = match (r.terms.first(), r.terms.get(1), r.differentials.first()) {
        (Some(p0), Some(p1), Some(d)) => ComplexOfModules::new(m.algebra(), -1, vec![p1.clone(), p0.clone()], vec![d.clone()])?,
        (Some(p0), _, _) => ComplexOfModules::concentrated(p0, 0),
        _ => return Ok(m.clone()),
    };
    Ok(nakayama(&x)?.cohomology(0))
}

/// `ν S ≅ Ω^{-(n+2)} S` on every simple of a self-injective algebra.
pub fn cy_spot_check<F: Field>(b: &Algebra<F>, n: usize) -> Result<Vec<bool>> {
    if !is_self_injective(b).verdict.is_true() {
        return Err(Error::InvalidParameter("cy_spot_check needs a self-injective algebra".into()));
    }
    (0..b.num_vertices())
        .map(|v| {
            let s = Representation::simple(b, v);
            let nu = strip_projectives(&nakayama_module(&s)?)?;
            let om = strip_projectives(&syzygy(&s, -(n as i64 + 2)))?;
            is_isomorphic(&nu, &om)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{auslander_algebra, dynkin_path_algebra, linear_nakayama};
    use crate::field::{PrimeField, Rationals};
    use crate::quivalg::algebra_from_strings;

    #[test]
    fn tau_finiteness() {
        let a = dynkin_path_algebra(&Rationals, &[true]).unwrap();
        let t = is_tau_n_finite(&a, 1, 8).unwrap();
        assert_eq!((t.verdict, t.vanishing_index), (Verdict::True, Some(2)));
        let s = algebra_from_strings(&Rationals, &["1"], &[], &[]).unwrap();
        assert_eq!(is_tau_n_finite(&s, 1, 8).unwrap().vanishing_index, Some(1));
        let f = PrimeField::default();
        let aus = auslander_algebra(&dynkin_path_algebra(&f, &[false, true]).unwrap()).unwrap();
        assert_eq!(is_tau_n_finite(&aus, 2, 8).unwrap().vanishing_index, Some(2));
    }

    #[test]
    fn representation_finiteness() {
        let a = dynkin_path_algebra(&Rationals, &[true]).unwrap();
        assert_eq!(is_n_rep_finite(&a, 1, 8).unwrap().verdict, Verdict::True);
        let f = PrimeField::default();
        let nak = linear_nakayama(&f, 3).unwrap();
        let r = is_n_rep_finite(&nak, 2, 8).unwrap();
        assert_eq!(r.verdict, Verdict::True);
        let aus = auslander_algebra(&dynkin_path_algebra(&f, &[false, true]).unwrap()).unwrap();
        assert_eq!(is_n_rep_finite(&aus, 2, 8).unwrap().verdict, Verdict::False);
        assert_eq!(is_n_rep_finite(&nak, 1, 8).unwrap().verdict, Verdict::False);
    }

    #[test]
    fn self_injectivity_and_gorenstein() {
        let a = dynkin_path_algebra(&Rationals, &[true]).unwrap();
        let s = is_self_injective(&a);
        assert_eq!((s.verdict, s.counterexample), (Verdict::False, Some(1)));
        assert_eq!(iwanaga_gorenstein_dim(&a, 8).unwrap(), 1);
        let tri = algebra_from_strings(
            &Rationals,
            &["1", "2", "3"],
            &[("x", "1", "2"), ("y", "2", "3"), ("z", "3", "1")],
            &["x*y", "y*z", "z*x"],
        )
        .unwrap();
        let s = is_self_injective(&tri);
        assert_eq!(s.nakayama_permutation, Some(vec![1, 2, 0]));
        assert_eq!(iwanaga_gorenstein_dim(&tri, 8).unwrap(), 0);
        assert_eq!(cy_spot_check(&tri, 2).unwrap(), vec![true; 3]);
        assert_eq!(cy_spot_check(&tri, 1).unwrap(), vec![false; 3]);
        assert!(cy_spot_check(&a, 1).is_err());
        assert!(is_cm(&Representation::projective(&tri, 0), 0).unwrap());
    }

    #[test]
    fn rigidity_and_vosnex() {
        let nak = linear_nakayama(&Rationals, 3).unwrap();
        let m = Representation::direct_sum(&[
            Representation::projective(&nak, 0),
            Representation::projective(&nak, 1),
            Representation::projective(&nak, 2),
            Representation::simple(&nak, 0),
        ]);
        assert!(rigidity(&m, 2).unwrap());
        assert!(rigidity(&Representation::simple(&nak, 1), 1).unwrap());
        assert!(!rigidity(&Representation::direct_sum(&[Representation::simple(&nak, 0), Representation::simple(&nak, 1)]), 2).unwrap());
        assert_eq!(vosnex(&nak, 2, 8).unwrap().verdict, Verdict::True);
    }

    #[test]
    fn vosnex_beyond_two() {
        let f = PrimeField::default();
        let nak = algebra_from_strings(
            &f,
            &["1", "2", "3", "4"],
            &[("a1", "1", "2"), ("a2", "2", "3"), ("a3", "3", "4")],
            &["a1*a2", "a2*a3"],
        )
        .unwrap();
        assert_eq!(gldim_or_none(&nak, 8).unwrap(), Some(3));
        assert_eq!(is_n_rep_finite(&nak, 3, 8).unwrap().verdict, Verdict::True);
        let r = vosnex(&nak, 3, 16).unwrap();
        assert_eq!(r.verdict, Verdict::True);
        assert!(!r.scanned.is_empty());
    }

    #[test]
    fn cohen_macaulay_over_gorenstein_tilde() {
        let f = PrimeField::default();
        let aus = auslander_algebra(&dynkin_path_algebra(&f, &[false, true]).unwrap()).unwrap();
        let t = crate::preproj::preprojective_algebra(&aus, 2, 8).unwrap();
        let b = crate::quivalg::quiver_presentation(&t.algebra).unwrap().algebra;
        let d = iwanaga_gorenstein_dim(&b, 8).unwrap();
        assert_eq!(d, 1);
        let simples: Vec<_> = (0..b.num_vertices()).map(|v| Representation::simple(&b, v)).collect();
        for s in &simples {
            assert!(is_cm(&syzygy(s, 1), d).unwrap());
        }
        let bad: Vec<bool> = simples.iter().map(|s| is_cm(s, d).unwrap()).collect();
        assert!(bad.contains(&false));
        for (s, cm) in simples.iter().zip(&bad) {
            let e: usize = (0..b.num_vertices()).map(|v| ext(s, &Representation::projective(&b, v), 1).unwrap()).sum();
            assert_eq!(*cm, e == 0);
        }
    }
}
