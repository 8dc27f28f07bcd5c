use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::checks::predicates::{
    cy_spot_check, gldim_or_none, is_n_rep_finite, is_self_injective, is_tau_n_finite, iwanaga_gorenstein_dim,
    rigidity, vosnex, NRepFiniteness, SelfInjectivity, TauFiniteness, VosnexReport,
};
use crate::derived::{amiot_hom, ProjComplex, DEFAULT_WINDOW_CAP};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::homolog::{ext, tau_n};
use crate::preproj::{preprojective_algebra, preprojective_module, stable_endomorphism, PreprojectiveSplit};
use crate::quivalg::{quiver_presentation, Algebra, Quiver};
use crate::repmod::{
    is_injective_module, is_isomorphic_indecomposable, is_projective_module, radical_layers, Representation,
};

/// A check result. Caps and inapplicable preconditions are values, not errors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome<T> {
    Ok { value: T },
    Unknown { reason: String },
    Skipped { reason: String },
}

impl<T> Outcome<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Outcome::Ok { value } => Some(value),
            _ => None,
        }
    }

    /// Cap errors become `Unknown`, `gldim > n` becomes `Skipped`.
    pub fn from_result(r: Result<T>) -> Result<Self> {
        match r {
            Ok(value) => Ok(Outcome::Ok { value }),
            Err(e @ (Error::AboveCap { .. } | Error::WindowInconclusive { .. } | Error::NotTauFinite { .. })) => {
                Ok(Outcome::Unknown { reason: e.to_string() })
            }
            Err(e @ Error::GldimTooLarge { .. }) => Ok(Outcome::Skipped { reason: e.to_string() }),
            Err(e) => Err(e),
        }
    }

    pub fn skipped(reason: &str) -> Self {
        Outcome::Skipped { reason: reason.into() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Iterations of `τ_n^-` and of `𝕊_n` on injectives.
    pub tau: usize,
    /// Bound on projective and injective dimensions.
    pub resolution: usize,
    pub window: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { tau: crate::preproj::DEFAULT_TAU_CAP, resolution: crate::homolog::DEFAULT_RESOLUTION_CAP, window: DEFAULT_WINDOW_CAP }
    }
}

/// One row of the `τ_n^-` table: `τ_n^{-i} P_v` per vertex, as dimension
/// vectors and as radical layers (top first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauRow {
    pub power: usize,
    pub dims: Vec<Vec<usize>>,
    pub layers: Vec<Vec<Vec<usize>>>,
    pub total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreprojectiveSummary {
    pub dim: usize,
    pub graded_dims: Vec<usize>,
    pub basic_summands: usize,
    pub projective_free_summands: usize,
    pub tau_table: Vec<TauRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverSummary {
    pub dim: usize,
    pub quiver: Quiver,
    /// Minimal relations between each ordered pair of vertices.
    pub relation_counts: Vec<Vec<usize>>,
    pub gldim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidation {
    pub tensor: Option<usize>,
    pub module: Option<usize>,
    pub orbit: Option<usize>,
    pub agree: bool,
}

/// `τ_n` on the non-projective basic summands of `Λ̃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauBijection {
    pub holds: bool,
    /// `(k, l)`: summand `k` is sent to summand `l`.
    pub pairs: Vec<(usize, usize)>,
    pub non_projective: usize,
    pub non_injective: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub algebra_id: String,
    pub field: FieldSpec,
    pub n: usize,
    pub dim: usize,
    pub vertex_labels: Vec<String>,
    pub gldim: Option<usize>,
    pub tau_n_finite: Outcome<TauFiniteness>,
    pub n_rep_finite: Outcome<NRepFiniteness>,
    pub preprojective: Outcome<PreprojectiveSummary>,
    pub self_injective: Outcome<SelfInjectivity>,
    pub vosnex: Outcome<VosnexReport>,
    pub ig_dimension: Outcome<usize>,
    pub rigidity: Outcome<bool>,
    pub tau_bijection: Outcome<TauBijection>,
    /// `Ext^i(DΛ, Λ̃) = 0` for `2 ≤ i ≤ n-1`.
    pub dual_ext_vanishes: Outcome<bool>,
    pub endomorphism: Outcome<QuiverSummary>,
    pub gamma: Outcome<QuiverSummary>,
    pub cross_validation: CrossValidation,
    pub cy_spot_check: Outcome<Vec<bool>>,
}

fn tau_table<F: Field>(split: &PreprojectiveSplit<F>) -> Vec<TauRow> {
    let depth = split.iterates.iter().map(Vec::len).max().unwrap_or(0);
    (0..=depth)
        .map(|i| {
            let dims: Vec<Vec<usize>> = split
                .iterates
                .iter()
                .map(|it| it.get(i).map_or_else(|| vec![0; split.iterates.len()], |m| m.dims().to_vec()))
                .collect();
            let layers = split.iterates.iter().map(|it| it.get(i).map_or_else(Vec::new, radical_layers)).collect();
            let total = dims.iter().flatten().sum();
            TauRow { power: i, dims, layers, total }
        })
        .collect()
}

fn summarize<F: Field>(b: &Algebra<F>, relation_counts: Vec<Vec<usize>>, cap: usize) -> Result<QuiverSummary> {
    Ok(QuiverSummary { dim: b.dim(), quiver: b.quiver().clone(), relation_counts, gldim: gldim_or_none(b, cap)? })
}

fn tau_bijection<F: Field>(summands: &[Representation<F>], n: usize) -> Result<TauBijection> {
    let non_proj: Vec<usize> = (0..summands.len()).filter(|&k| !is_projective_module(&summands[k])).collect();
    let non_inj: Vec<usize> = (0..summands.len()).filter(|&k| !is_injective_module(&summands[k])).collect();
    let mut pairs = Vec::new();
    for &k in &non_proj {
        let t = tau_n(&summands[k], n)?;
        let mut hit = None;
        for &l in &non_inj {
            if t.dims() == summands[l].dims() && is_isomorphic_indecomposable(&t, &summands[l])? {
                hit = Some(l);
                break;
            }
        }
        if let Some(l) = hit {
            pairs.push((k, l));
        }
    }
    let mut images: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    images.sort_unstable();
    images.dedup();
    let holds = pairs.len() == non_proj.len() && images.len() == non_inj.len() && non_proj.len() == non_inj.len();
    Ok(TauBijection { holds, pairs, non_projective: non_proj.len(), non_injective: non_inj.len() })
}

fn dual_ext_vanishes<F: Field>(a: &Algebra<F>, tilde: &Representation<F>, n: usize) -> Result<bool> {
    for v in 0..a.num_vertices() {
        let i_v = Representation::injective(a, v);
        for i in 2..n {
            if ext(&i_v, tilde, i)? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl AnalysisReport {
    /// The report of the zero algebra: every check skipped, all dimensions 0.
    pub fn empty(algebra_id: &str, field: FieldSpec, n: usize) -> Self {
        let why = "the algebra is zero";
        AnalysisReport {
            algebra_id: algebra_id.to_string(),
            field,
            n,
            dim: 0,
            vertex_labels: Vec::new(),
            gldim: Some(0),
            tau_n_finite: Outcome::skipped(why),
            n_rep_finite: Outcome::skipped(why),
            preprojective: Outcome::skipped(why),
            self_injective: Outcome::skipped(why),
            vosnex: Outcome::skipped(why),
            ig_dimension: Outcome::skipped(why),
            rigidity: Outcome::skipped(why),
            tau_bijection: Outcome::skipped(why),
            dual_ext_vanishes: Outcome::skipped(why),
            endomorphism: Outcome::skipped(why),
            gamma: Outcome::skipped(why),
            cross_validation: CrossValidation { tensor: Some(0), module: Some(0), orbit: Some(0), agree: true },
            cy_spot_check: Outcome::skipped(why),
        }
    }
}

/// Wall-clock milliseconds per stage of [`analyze_timed`], in run order.
pub type Timings = Vec<(&'static str, f64)>;

struct Stopwatch {
    last: Instant,
    laps: Timings,
}

impl Stopwatch {
    fn lap(&mut self, stage: &'static str) {
        let now = Instant::now();
        self.laps.push((stage, (now - self.last).as_secs_f64() * 1e3));
        self.last = now;
    }
}

/// Run every check on `a` for the given `n`.
pub fn analyze<F: Field>(algebra_id: &str, a: &Algebra<F>, n: usize, caps: Caps) -> Result<AnalysisReport> {
    analyze_timed(algebra_id, a, n, caps).map(|(r, _)| r)
}

/// [`analyze`], also returning how long each stage took.
pub fn analyze_timed<F: Field>(algebra_id: &str, a: &Algebra<F>, n: usize, caps: Caps) -> Result<(AnalysisReport, Timings)> {
    let mut sw = Stopwatch { last: Instant::now(), laps: Vec::new() };
    if a.num_vertices() == 0 {
        return Ok((AnalysisReport::empty(algebra_id, a.field().spec(), n), sw.laps));
    }
    let gldim = gldim_or_none(a, caps.resolution)?;
    sw.lap("gldim");
    let tau_n_finite = Outcome::from_result(is_tau_n_finite(a, n, caps.tau))?;
    sw.lap("tau_n_finite");
    let n_rep_finite = Outcome::from_result(is_n_rep_finite(a, n, caps.tau))?;
    sw.lap("n_rep_finite");
    let split = Outcome::from_result(preprojective_module(a, n, caps.tau))?;
    let mut cross = CrossValidation { tensor: None, module: None, orbit: None, agree: false };

    let (preprojective, basic, tilde) = match &split {
        Outcome::Ok { value: s } => {
            let basic = s.basic_summands()?;
            let tilde = if basic.is_empty() { Representation::zero(a) } else { Representation::direct_sum(&basic) };
            let summary = PreprojectiveSummary {
                dim: s.dim(),
                graded_dims: s.graded_dims(),
                basic_summands: basic.len(),
                projective_free_summands: basic.iter().filter(|m| !is_projective_module(m)).count(),
                tau_table: tau_table(s),
            };
            cross.module = Some(s.dim());
            (Outcome::Ok { value: summary }, Some(basic), Some(tilde))
        }
        Outcome::Unknown { reason } => (Outcome::Unknown { reason: reason.clone() }, None, None),
        Outcome::Skipped { reason } => (Outcome::Skipped { reason: reason.clone() }, None, None),
    };
    sw.lap("preprojective");
    let need = "needs the preprojective module";

    let tensor = Outcome::from_result(preprojective_algebra(a, n, caps.tau))?;
    let presented = match tensor.value() {
        Some(t) => {
            cross.tensor = Some(t.algebra.dim());
            Some(quiver_presentation(&t.algebra)?)
        }
        None => None,
    };
    if split.value().is_some() {
        let reg = ProjComplex::regular(a).to_complex();
        if let Ok(h) = amiot_hom(n, &reg, &reg, caps.window) {
            cross.orbit = Some(h.total());
        }
    }
    sw.lap("cross_validation");
    cross.agree = matches!((cross.tensor, cross.module, cross.orbit), (Some(x), Some(y), Some(z)) if x == y && y == z);

    let (self_injective, ig_dimension, cy) = match &presented {
        Some(p) => {
            let si = is_self_injective(&p.algebra);
            let cy = if si.verdict.is_true() {
                Outcome::from_result(cy_spot_check(&p.algebra, n))?
            } else {
                Outcome::skipped("needs a self-injective preprojective algebra")
            };
            (Outcome::Ok { value: si }, Outcome::from_result(iwanaga_gorenstein_dim(&p.algebra, caps.resolution))?, cy)
        }
        None => (Outcome::skipped(need), Outcome::skipped(need), Outcome::skipped(need)),
    };
    sw.lap("self_injective");

    let vosnex = if tau_n_finite.value().is_some_and(|t| t.verdict.is_true()) {
        Outcome::from_result(vosnex(a, n, caps.window))?
    } else {
        Outcome::skipped("needs a τ_n-finite algebra")
    };
    sw.lap("vosnex");

    let (rigidity, tau_bijection, dual_ext, endomorphism) = match (&basic, &tilde) {
        (Some(b), Some(t)) => {
            let e = endomorphism_algebra_summary(b, caps.resolution)?;
            (
                Outcome::Ok { value: rigidity(t, n)? },
                Outcome::Ok { value: tau_bijection(b, n)? },
                Outcome::Ok { value: dual_ext_vanishes(a, t, n)? },
                e,
            )
        }
        _ => (Outcome::skipped(need), Outcome::skipped(need), Outcome::skipped(need), Outcome::skipped(need)),
    };
    sw.lap("endomorphism");

    let gamma = if split.value().is_some() {
        match stable_endomorphism(a, n, caps.tau) {
            Ok(s) if s.algebra.dim() == 0 => Outcome::Ok {
                value: QuiverSummary { dim: 0, quiver: Quiver::new(Vec::new(), Vec::new())?, relation_counts: Vec::new(), gldim: Some(0) },
            },
            Ok(s) => {
                let p = quiver_presentation(&s.algebra)?;
                Outcome::Ok { value: summarize(&p.algebra, p.relation_counts, caps.resolution)? }
            }
            Err(e) => Outcome::from_result(Err(e))?,
        }
    } else {
        Outcome::skipped(need)
    };
    sw.lap("gamma");

    let report = AnalysisReport {
        algebra_id: algebra_id.to_string(),
        field: a.field().spec(),
        n,
        dim: a.dim(),
        vertex_labels: a.quiver().vertices().to_vec(),
        gldim,
        tau_n_finite,
        n_rep_finite,
        preprojective,
        self_injective,
        vosnex,
        ig_dimension,
        rigidity,
        tau_bijection,
        dual_ext_vanishes: dual_ext,
        endomorphism,
        gamma,
        cross_validation: cross,
        cy_spot_check: cy,
    };
    Ok((report, sw.laps))
}

fn endomorphism_algebra_summary<F: Field>(basic: &[Representation<F>], cap: usize) -> Result<Outcome<QuiverSummary>> {
    let e = crate::repmod::endomorphism_algebra(basic)?;
    let p = quiver_presentation(&e.algebra)?;
    Ok(Outcome::Ok { value: summarize(&p.algebra, p.relation_counts, cap)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::Verdict;
    use crate::families::{auslander_algebra, dynkin_path_algebra, linear_nakayama};
    use crate::field::PrimeField;

    #[test]
    fn nakayama_report() {
        let f = PrimeField::default();
        let a = linear_nakayama(&f, 3).unwrap();
        let r = analyze("nak3", &a, 2, Caps::default()).unwrap();
        assert_eq!(r.n_rep_finite.value().unwrap().verdict, Verdict::True);
        assert_eq!(r.preprojective.value().unwrap().dim, 6);
        assert_eq!(r.cross_validation, CrossValidation { tensor: Some(6), module: Some(6), orbit: Some(6), agree: true });
        assert_eq!(r.self_injective.value().unwrap().verdict, Verdict::True);
        assert_eq!(r.ig_dimension.value(), Some(&0));
        assert_eq!(r.cy_spot_check.value(), Some(&vec![true; 3]));
        assert!(r.tau_bijection.value().unwrap().holds);
        assert_eq!(r.rigidity.value(), Some(&true));
        assert!(r.endomorphism.value().unwrap().gldim.unwrap() <= 3);
        let json = serde_json::to_string(&r).unwrap();
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn auslander_report() {
        let f = PrimeField::default();
        let a = auslander_algebra(&dynkin_path_algebra(&f, &[false, true]).unwrap()).unwrap();
        let r = analyze("aus-a3", &a, 2, Caps::default()).unwrap();
        assert_eq!(r.n_rep_finite.value().unwrap().verdict, Verdict::False);
        assert_eq!(r.self_injective.value().unwrap().verdict, Verdict::False);
        assert_eq!(r.ig_dimension.value(), Some(&1));
        assert!(matches!(r.cy_spot_check, Outcome::Skipped { .. }));
        let t = r.preprojective.value().unwrap();
        assert_eq!(t.tau_table.iter().map(|row| row.total).collect::<Vec<_>>(), vec![15, 5, 0]);
        let g = r.gamma.value().unwrap();
        assert_eq!((g.dim, g.quiver.num_vertices(), g.quiver.num_arrows()), (5, 3, 2));
        assert!(g.gldim.unwrap() <= 3);
        assert!(r.cross_validation.agree);
    }

    #[test]
    fn high_gldim_is_skipped() {
        let f = PrimeField::default();
        let a = auslander_algebra(&dynkin_path_algebra(&f, &[false, true]).unwrap()).unwrap();
        let r = analyze("aus-a3", &a, 1, Caps::default()).unwrap();
        assert_eq!(r.n_rep_finite.value().unwrap().verdict, Verdict::False);
        assert!(matches!(r.preprojective, Outcome::Skipped { .. }));
        assert!(matches!(r.tau_n_finite, Outcome::Skipped { .. }));
    }
}
