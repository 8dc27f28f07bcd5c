//! Generators for the concrete algebra families, AR knitting and
//! (higher) Auslander algebras.

use serde::{Deserialize, Serialize};

use crate::checks::is_n_rep_finite;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homolog::tau_inv;
use crate::preproj::{preprojective_module, DEFAULT_TAU_CAP};
use crate::quivalg::{algebra_from_strings, quiver_presentation, Algebra};
use crate::repmod::{endomorphism_algebra, is_isomorphic_indecomposable, Representation};

/// Upper bound on the number of indecomposables produced by knitting.
pub const KNIT_CAP: usize = 512;

/// Arrow choice for each square of the `thm39_type2` quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Choice {
    Gamma,
    Delta,
}

impl std::str::FromStr for Choice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g" | "gamma" | "γ" => Ok(Choice::Gamma),
            "d" | "delta" | "δ" => Ok(Choice::Delta),
            _ => Err(Error::InvalidParameter(format!("unknown choice `{s}`, expected gamma or delta"))),
        }
    }
}

/// A plain-data description of an algebra: field-independent labels and
/// relation strings in the `parse_relation` syntax.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    pub relations: Vec<String>,
    pub metadata: Vec<(String, String)>,
}

impl QuiverSpec {
    pub fn build<F: Field>(&self, field: &F) -> Result<Algebra<F>> {
        let v: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let a: Vec<(&str, &str, &str)> =
            self.arrows.iter().map(|(x, y, z)| (x.as_str(), y.as_str(), z.as_str())).collect();
        let r: Vec<&str> = self.relations.iter().map(String::as_str).collect();
        algebra_from_strings(field, &v, &a, &r)
    }

    /// Spec of an existing algebra, relations taken from its defining list.
    pub fn of<F: Field>(a: &Algebra<F>) -> Self {
        let q = a.quiver();
        QuiverSpec {
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|x| (x.label.clone(), q.vertices()[x.source].clone(), q.vertices()[x.target].clone()))
                .collect(),
            relations: a.relations().iter().map(|r| r.format(a.field(), q)).collect(),
            metadata: Vec::new(),
        }
    }
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn arrow(l: &str, s: &str, t: &str) -> (String, String, String) {
    (l.to_string(), s.to_string(), t.to_string())
}

/// Linear quiver on `v` vertices with the full composite path as relation.
pub fn linear_nakayama_spec(v: usize) -> Result<QuiverSpec> {
    if v < 3 {
        return Err(Error::InvalidParameter(format!(
            "linear_nakayama needs at least 3 vertices, got {v} (for 2 vertices the relation would be an arrow)"
        )));
    }
    let vertices: Vec<String> = (1..=v).map(|i| i.to_string()).collect();
    let arrows = (1..v).map(|i| arrow(&format!("a{i}"), &i.to_string(), &(i + 1).to_string())).collect();
    let rel = (1..v).map(|i| format!("a{i}")).collect::<Vec<_>>().join("*");
    Ok(QuiverSpec { vertices, arrows, relations: vec![rel], metadata: vec![("family".into(), "linear_nakayama".into())] })
}

pub fn linear_nakayama<F: Field>(field: &F, v: usize) -> Result<Algebra<F>> {
    linear_nakayama_spec(v)?.build(field)
}

/// The type-2 iterated tilted quiver: vertices `1..v` joined by `b1..b(v-1)`, a
/// detour `1 -> t -> v` through `al1, al2`, and per square either
/// `g_i: c_i -> i` (relation `g_i b_i`) or `d_i: i+1 -> c_i` (relation
/// `b_i d_i`). For `v = 2` the arrow `b1` equals `al1 al2` and is eliminated.
pub fn thm39_type2_spec(v: usize, choices: &[Choice]) -> Result<QuiverSpec> {
    if v < 2 {
        return Err(Error::InvalidParameter("thm39_type2 needs v >= 2".into()));
    }
    if choices.len() != v - 1 {
        return Err(Error::InvalidParameter(format!("thm39_type2 with v = {v} needs {} choices, got {}", v - 1, choices.len())));
    }
    let mut vertices: Vec<String> = (1..=v).map(|i| i.to_string()).collect();
    vertices.push("t".into());
    vertices.extend((1..v).map(|i| format!("c{i}")));
    let mut arrows = vec![arrow("al1", "1", "t"), arrow("al2", "t", &v.to_string())];
    let keep_b = v > 2;
    if keep_b {
        arrows.extend((1..v).map(|i| arrow(&format!("b{i}"), &i.to_string(), &(i + 1).to_string())));
    }
    let b = |i: usize| if keep_b { format!("b{i}") } else { "al1*al2".to_string() };
    let mut relations = Vec::new();
    if keep_b {
        relations.push(format!("al1*al2 - {}", (1..v).map(|i| format!("b{i}")).collect::<Vec<_>>().join("*")));
    }
    for (k, c) in choices.iter().enumerate() {
        let i = k + 1;
        match c {
            Choice::Gamma => {
                arrows.push(arrow(&format!("g{i}"), &format!("c{i}"), &i.to_string()));
                relations.push(format!("g{i}*{}", b(i)));
            }
            Choice::Delta => {
                arrows.push(arrow(&format!("d{i}"), &(i + 1).to_string(), &format!("c{i}")));
                relations.push(format!("{}*d{i}", b(i)));
            }
        }
    }
    let tag: String = choices.iter().map(|c| if *c == Choice::Gamma { 'g' } else { 'd' }).collect();
    Ok(QuiverSpec {
        vertices,
        arrows,
        relations,
        metadata: vec![("family".into(), "thm39_type2".into()), ("choices".into(), tag)],
    })
}

pub fn thm39_type2<F: Field>(field: &F, v: usize, choices: &[Choice]) -> Result<Algebra<F>> {
    thm39_type2_spec(v, choices)?.build(field)
}

/// Canonical algebra of type (2,2,2,2): source `s`, sink `w`, arms
/// `x_i: s -> m_i`, `y_i: m_i -> w`, with
/// `x3 y3 = x1 y1 + x2 y2` and `x4 y4 = x1 y1 + λ x2 y2`.
pub fn canonical_2222_spec(lambda: &str) -> QuiverSpec {
    let mut vertices = strings(&["s", "w"]);
    vertices.extend((1..=4).map(|i| format!("m{i}")));
    let mut arrows = Vec::new();
    for i in 1..=4 {
        arrows.push(arrow(&format!("x{i}"), "s", &format!("m{i}")));
        arrows.push(arrow(&format!("y{i}"), &format!("m{i}"), "w"));
    }
    let last = match lambda.strip_prefix('-') {
        Some(abs) => format!("x4*y4 - x1*y1 + {abs}*x2*y2"),
        None => format!("x4*y4 - x1*y1 - {lambda}*x2*y2"),
    };
    let relations = vec!["x3*y3 - x1*y1 - x2*y2".to_string(), last];
    QuiverSpec {
        vertices,
        arrows,
        relations,
        metadata: vec![
            ("family".into(), "canonical_2222".into()),
            ("lambda".into(), lambda.to_string()),
            ("relations".into(), "x3y3 = x1y1 + x2y2, x4y4 = x1y1 + lambda x2y2".into()),
        ],
    }
}

pub fn canonical_2222<F: Field>(field: &F, lambda: &F::Elem) -> Result<Algebra<F>> {
    if field.is_zero(lambda) || *lambda == field.one() {
        return Err(Error::InvalidParameter("canonical_2222 needs lambda outside {0, 1}".into()));
    }
    canonical_2222_spec(&field.format(lambda)).build(field)
}

/// Path algebra of type `A_s`; `forward[i]` orients the `i`-th edge as
/// `i+1 -> i+2` (else `i+2 -> i+1`).
pub fn dynkin_a_spec(forward: &[bool]) -> QuiverSpec {
    let s = forward.len() + 1;
    let vertices = (1..=s).map(|i| i.to_string()).collect();
    let arrows = forward
        .iter()
        .enumerate()
        .map(|(k, &fw)| {
            let (x, y) = ((k + 1).to_string(), (k + 2).to_string());
            if fw {
                arrow(&format!("a{}", k + 1), &x, &y)
            } else {
                arrow(&format!("a{}", k + 1), &y, &x)
            }
        })
        .collect();
    let orient: String = forward.iter().map(|&f| if f { '>' } else { '<' }).collect();
    QuiverSpec {
        vertices,
        arrows,
        relations: vec![],
        metadata: vec![("family".into(), "dynkin".into()), ("orientation".into(), orient)],
    }
}

/// Parse names such as `A4` (linear), `A3-nonlinear` (`1 <- 2 -> 3`) or
/// `A3:<>` (explicit orientation, `>` meaning `i -> i+1`).
pub fn dynkin_orientation(name: &str) -> Result<Vec<bool>> {
    let bad = || Error::InvalidParameter(format!("unknown Dynkin type `{name}`"));
    let rest = name.strip_prefix('A').ok_or_else(bad)?;
    let (num, tail) = match rest.find(|c: char| !c.is_ascii_digit()) {
        Some(p) => rest.split_at(p),
        None => (rest, ""),
    };
    let s: usize = num.parse().map_err(|_| bad())?;
    if s < 1 {
        return Err(bad());
    }
    match tail {
        "" | "-linear" => Ok(vec![true; s - 1]),
        "-nonlinear" if s == 3 => Ok(vec![false, true]),
        t if t.starts_with(':') => {
            let o: Vec<bool> = t[1..]
                .chars()
                .map(|c| match c {
                    '>' => Ok(true),
                    '<' => Ok(false),
                    _ => Err(bad()),
                })
                .collect::<Result<_>>()?;
            if o.len() + 1 != s {
                return Err(bad());
            }
            Ok(o)
        }
        _ => Err(bad()),
    }
}

pub fn dynkin_path_algebra<F: Field>(field: &F, forward: &[bool]) -> Result<Algebra<F>> {
    dynkin_a_spec(forward).build(field)
}

/// All indecomposables of a representation-finite hereditary algebra: the
/// projectives (by dimension, then vertex) followed by their τ⁻-orbits in
/// breadth-first order.
pub fn knit_indecomposables<F: Field>(a: &Algebra<F>) -> Result<Vec<Representation<F>>> {
    if !a.relations().is_empty() {
        return Err(Error::InvalidParameter("knitting needs a path algebra without relations".into()));
    }
    let mut found: Vec<Representation<F>> = (0..a.num_vertices()).map(|v| Representation::projective(a, v)).collect();
    found.sort_by_key(Representation::dim);
    let mut i = 0;
    while i < found.len() {
        let next = tau_inv(&found[i])?;
        i += 1;
        if next.is_zero() {
            continue;
        }
        let mut new = true;
        for x in &found {
            if is_isomorphic_indecomposable(x, &next)? {
                new = false;
                break;
            }
        }
        if new {
            if found.len() >= KNIT_CAP {
                return Err(Error::AboveCap { cap: KNIT_CAP });
            }
            found.push(next);
        }
    }
    Ok(found)
}

/// Basic algebra of `End(⊕ mods)` as a bound quiver algebra, vertices in the
/// order of `mods`.
pub fn endomorphism_quiver_algebra<F: Field>(mods: &[Representation<F>]) -> Result<Algebra<F>> {
    let e = endomorphism_algebra(mods)?;
    Ok(quiver_presentation(&e.algebra)?.algebra)
}

/// The Auslander algebra `End(⊕ indecomposables)`.
pub fn auslander_algebra<F: Field>(a: &Algebra<F>) -> Result<Algebra<F>> {
    endomorphism_quiver_algebra(&knit_indecomposables(a)?)
}

/// `[A^0, …, A^m]` with `A^0 = kA_s` linearly oriented and `A^{j+1}` the
/// `(j+1)`-Auslander algebra `End(Λ̃(A^j, j+1))`. Each `A^j` must be
/// `(j+1)`-representation-finite before the next stage is built.
pub fn higher_auslander_chain<F: Field>(field: &F, s: usize, m: usize) -> Result<Vec<Algebra<F>>> {
    if s < 2 || m < 1 {
        return Err(Error::InvalidParameter(format!("higher_auslander_chain needs s >= 2 and m >= 1, got s = {s}, m = {m}")));
    }
    let mut chain = vec![dynkin_path_algebra(field, &vec![true; s - 1])?];
    for j in 0..m {
        let a = &chain[j];
        let fail = |reason: String| Error::StageFailed { stage: j, reason };
        let r = is_n_rep_finite(a, j + 1, DEFAULT_TAU_CAP)?;
        if !r.verdict.is_true() {
            return Err(fail(format!("{}-representation-finiteness is {}", j + 1, r.verdict)));
        }
        let split = preprojective_module(a, j + 1, DEFAULT_TAU_CAP).map_err(|e| fail(e.to_string()))?;
        let next = endomorphism_quiver_algebra(&split.basic_summands()?)?;
        chain.push(next);
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn family_dimensions() {
        assert_eq!(linear_nakayama(&Rationals, 3).unwrap().dim(), 5);
        assert_eq!(linear_nakayama(&Rationals, 4).unwrap().dim(), 9);
        assert!(linear_nakayama(&Rationals, 2).is_err());
        assert_eq!(dynkin_path_algebra(&Rationals, &[true]).unwrap().dim(), 3);
        assert_eq!(dynkin_path_algebra(&Rationals, &[true; 3]).unwrap().dim(), 10);
        assert_eq!(dynkin_path_algebra(&Rationals, &[true, false]).unwrap().dim(), 5);
        let f = PrimeField::default();
        let c = canonical_2222(&f, &2).unwrap();
        assert_eq!((c.quiver().num_vertices(), c.quiver().num_arrows()), (6, 8));
        assert!(canonical_2222(&f, &1).is_err());
        assert_eq!(canonical_2222_spec("-3").relations[1], "x4*y4 - x1*y1 + 3*x2*y2");
        let neg = canonical_2222(&f, &f.from_i64(-3)).unwrap();
        assert_eq!(neg.dim(), canonical_2222(&f, &f.from_i64(32000)).unwrap().dim());
        assert!(thm39_type2(&f, 3, &[Choice::Gamma]).is_err());
    }

    #[test]
    fn orientation_names() {
        assert_eq!(dynkin_orientation("A4").unwrap(), vec![true; 3]);
        assert_eq!(dynkin_orientation("A3-nonlinear").unwrap(), vec![false, true]);
        assert_eq!(dynkin_orientation("A3:<<").unwrap(), vec![false, false]);
        assert!(dynkin_orientation("D4").is_err());
    }

    #[test]
    fn knitting_counts() {
        for s in 2..=4 {
            let a = dynkin_path_algebra(&Rationals, &vec![true; s - 1]).unwrap();
            assert_eq!(knit_indecomposables(&a).unwrap().len(), s * (s + 1) / 2);
        }
        for o in [[false, true], [true, false], [false, false]] {
            let a = dynkin_path_algebra(&Rationals, &o).unwrap();
            assert_eq!(knit_indecomposables(&a).unwrap().len(), 6);
        }
    }

    #[test]
    fn auslander_algebras() {
        let a2 = auslander_algebra(&dynkin_path_algebra(&Rationals, &[true]).unwrap()).unwrap();
        assert_eq!((a2.quiver().num_vertices(), a2.quiver().num_arrows(), a2.relations().len()), (3, 2, 1));
        let a3 = auslander_algebra(&dynkin_path_algebra(&Rationals, &[false, true]).unwrap()).unwrap();
        assert_eq!((a3.quiver().num_vertices(), a3.quiver().num_arrows()), (6, 6));
        let a4 = auslander_algebra(&dynkin_path_algebra(&Rationals, &[true; 3]).unwrap()).unwrap();
        assert_eq!((a4.quiver().num_vertices(), a4.quiver().num_arrows()), (10, 12));
    }

    #[test]
    fn higher_auslander_chains() {
        let f = PrimeField::default();
        let sizes = |s: usize, m: usize| -> Vec<usize> {
            higher_auslander_chain(&f, s, m).unwrap().iter().map(|a| a.num_vertices()).collect()
        };
        assert_eq!(sizes(2, 1), vec![2, 3]);
        assert_eq!(sizes(4, 1), vec![4, 10]);
        assert_eq!(sizes(3, 2), vec![3, 6, 10]);
        let aus = higher_auslander_chain(&f, 4, 1).unwrap().pop().unwrap();
        assert_eq!(aus.quiver().num_arrows(), 12);
        assert!(aus.quiver().is_isomorphic(auslander_algebra(&dynkin_path_algebra(&f, &[true; 3]).unwrap()).unwrap().quiver()));
        assert!(higher_auslander_chain(&f, 1, 1).is_err());
    }

    #[test]
    fn stable_higher_auslander() {
        let f = PrimeField::default();
        for s in [3, 4] {
            let prev = higher_auslander_chain(&f, s, 1).unwrap().pop().unwrap();
            let st = crate::preproj::stable_endomorphism(&prev, 2, DEFAULT_TAU_CAP).unwrap();
            let p = quiver_presentation(&st.algebra).unwrap();
            let smaller = higher_auslander_chain(&f, s - 1, 2).unwrap().pop().unwrap();
            assert_eq!(p.algebra.dim(), smaller.dim(), "s = {s}");
            assert!(p.algebra.quiver().is_isomorphic(smaller.quiver()), "s = {s}");
        }
    }
}
