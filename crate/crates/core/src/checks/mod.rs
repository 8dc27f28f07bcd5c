mod predicates;
mod report;

pub use predicates::{
    cy_spot_check, gldim_or_none, is_cm, is_n_rep_finite, is_self_injective, is_tau_n_finite, iwanaga_gorenstein_dim,
    nakayama_module, rigidity, vosnex, InjectiveWitness, NRepFiniteness, SelfInjectivity, TauFiniteness, Verdict,
    VosnexReport,
};
pub use report::{
    analyze, analyze_timed, AnalysisReport, Caps, CrossValidation, Outcome, PreprojectiveSummary, QuiverSummary, TauBijection, TauRow,
    Timings,
};
