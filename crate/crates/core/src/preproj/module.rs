use crate::error::{Error, Result};
use crate::field::Field;
use crate::homolog::{global_dimension, tau_n_inv, DEFAULT_RESOLUTION_CAP};
use crate::quivalg::Algebra;
use crate::repmod::{indecomposable_summands, is_isomorphic_indecomposable, Representation};

/// Default bound on the number of `τ_n⁻` iterations.
pub const DEFAULT_TAU_CAP: usize = 64;

/// `Λ̃ = ⊕_{i≥0} τ_n^{-i} Λ` as a `Λ`-module, with its split into the part in
/// `add Λ` and the projective-free part `Λ̃_P`.
#[derive(Clone, Debug)]
pub struct PreprojectiveSplit<F: Field> {
    pub n: usize,
    /// `iterates[v][i] = τ_n^{-i} P_v` up to the first zero.
    pub iterates: Vec<Vec<Representation<F>>>,
    /// Indecomposable summands of the whole module, with repetition, in the
    /// order `(i, v)` by iterate index first.
    pub summands: Vec<Representation<F>>,
    /// Iterate index of each entry of `summands`.
    pub summand_degree: Vec<usize>,
    pub whole: Representation<F>,
    pub projective_part: Representation<F>,
    pub p_free: Representation<F>,
    pub i_free: Representation<F>,
    pub projective_indices: Vec<usize>,
    pub injective_indices: Vec<usize>,
}

impl<F: Field> PreprojectiveSplit<F> {
    pub fn dim(&self) -> usize {
        self.whole.dim()
    }

    /// `dim τ_n^{-i} Λ` for `i = 0, 1, …` up to the first zero.
    pub fn graded_dims(&self) -> Vec<usize> {
        let depth = self.iterates.iter().map(Vec::len).max().unwrap_or(0);
        (0..depth).map(|i| self.iterates.iter().filter_map(|it| it.get(i)).map(Representation::dim).sum()).collect()
    }

    /// Smallest `i` with `τ_n^{-i} Λ = 0`.
    pub fn vanishing_index(&self) -> usize {
        self.graded_dims().len()
    }

    /// Pairwise non-isomorphic indecomposable summands, first occurrence order.
    pub fn basic_summands(&self) -> Result<Vec<Representation<F>>> {
        basic(&self.summands)
    }

    pub fn p_free_summands(&self) -> Vec<Representation<F>> {
        let proj: std::collections::HashSet<usize> = self.projective_indices.iter().copied().collect();
        (0..self.summands.len()).filter(|k| !proj.contains(k)).map(|k| self.summands[k].clone()).collect()
    }
}

pub(crate) fn basic<F: Field>(mods: &[Representation<F>]) -> Result<Vec<Representation<F>>> {
    let mut out: Vec<Representation<F>> = Vec::new();
    for m in mods {
        let mut seen = false;
        for x in &out {
            if is_isomorphic_indecomposable(x, m)? {
                seen = true;
                break;
            }
        }
        if !seen {
            out.push(m.clone());
        }
    }
    Ok(out)
}

fn sum_or_zero<F: Field>(a: &Algebra<F>, mods: &[Representation<F>]) -> Representation<F> {
    if mods.is_empty() {
        Representation::zero(a)
    } else {
        Representation::direct_sum(mods)
    }
}

/// `τ_n^{-i} P_v` for every vertex until zero. Errors with `NotTauFinite`
/// carrying the dimension of the last nonzero iterate when the cap is hit.
pub fn tau_n_inv_iterates<F: Field>(a: &Algebra<F>, n: usize, cap: usize) -> Result<Vec<Vec<Representation<F>>>> {
    let mut out = Vec::new();
    for v in 0..a.num_vertices() {
        let mut chain = vec![Representation::projective(a, v)];
        loop {
            let next = tau_n_inv(chain.last().unwrap(), n)?;
            if next.is_zero() {
                break;
            }
            if chain.len() > cap {
                return Err(Error::NotTauFinite { cap, last_dim: next.dim() });
            }
            chain.push(next);
        }
        out.push(chain);
    }
    Ok(out)
}

pub(crate) fn check_gldim<F: Field>(a: &Algebra<F>, n: usize) -> Result<()> {
    let g = global_dimension(a, n.max(1) + 1).or_else(|e| match e {
        Error::AboveCap { .. } => Ok(usize::MAX),
        e => Err(e),
    })?;
    if g > n {
        return Err(Error::GldimTooLarge { gldim: g.min(DEFAULT_RESOLUTION_CAP), n });
    }
    Ok(())
}

pub fn preprojective_module<F: Field>(a: &Algebra<F>, n: usize, cap: usize) -> Result<PreprojectiveSplit<F>> {
    check_gldim(a, n)?;
    let iterates = tau_n_inv_iterates(a, n, cap)?;
    let depth = iterates.iter().map(Vec::len).max().unwrap_or(0);
    let mut summands = Vec::new();
    let mut summand_degree = Vec::new();
    for i in 0..depth {
        for chain in &iterates {
            if let Some(m) = chain.get(i) {
                for s in indecomposable_summands(m)? {
                    summands.push(s);
                    summand_degree.push(i);
                }
            }
        }
    }
    let projectives: Vec<Representation<F>> = (0..a.num_vertices()).map(|v| Representation::projective(a, v)).collect();
    let injectives: Vec<Representation<F>> = (0..a.num_vertices()).map(|v| Representation::injective(a, v)).collect();
    let mut projective_indices = Vec::new();
    let mut injective_indices = Vec::new();
    for (k, s) in summands.iter().enumerate() {
        for p in &projectives {
            if is_isomorphic_indecomposable(s, p)? {
                projective_indices.push(k);
                break;
            }
        }
        for q in &injectives {
            if is_isomorphic_indecomposable(s, q)? {
                injective_indices.push(k);
                break;
            }
        }
    }
    let pick = |idx: &[usize], keep: bool| -> Vec<Representation<F>> {
        (0..summands.len()).filter(|k| idx.contains(k) == keep).map(|k| summands[k].clone()).collect()
    };
    let whole = sum_or_zero(a, &summands);
    let projective_part = sum_or_zero(a, &pick(&projective_indices, true));
    let p_free = sum_or_zero(a, &pick(&projective_indices, false));
    let i_free = sum_or_zero(a, &pick(&injective_indices, false));
    Ok(PreprojectiveSplit {
        n,
        iterates,
        summands,
        summand_degree,
        whole,
        projective_part,
        p_free,
        i_free,
        projective_indices,
        injective_indices,
    })
}
