//! Markdown views. Quivers render as adjacency lists, modules as radical
//! layers read top down (`6 / 4 5` is a module with top 6 and socle 4 ⊕ 5).

use std::collections::BTreeMap;
use std::fmt::Write;

use npreproj_core::checks::{AnalysisReport, Outcome, QuiverSummary, TauRow, Verdict};
use npreproj_core::quivalg::Quiver;
use serde_json::Value;

fn subscript(n: usize) -> String {
    n.to_string().chars().map(|c| char::from_u32(0x2080 + c.to_digit(10).expect("digit")).expect("subscript")).collect()
}

fn superscript(n: usize) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| SUP[c.to_digit(10).expect("digit") as usize]).collect()
}

/// `τ₂⁻`, `τ₂⁻²`, ...
pub fn tau_minus(n: usize, power: usize) -> String {
    let p = if power == 1 { String::new() } else { superscript(power) };
    format!("τ{}⁻{p}", subscript(n))
}

/// One line per vertex: its outgoing arrows.
pub fn adjacency(q: &Quiver) -> String {
    let mut out = String::new();
    for (v, label) in q.vertices().iter().enumerate() {
        let outs: Vec<String> = q.arrows_from(v).map(|a| format!("{} → {}", q.arrow(a).label, q.vertices()[q.arrow(a).target])).collect();
        let rhs = if outs.is_empty() { "(sink)".to_string() } else { outs.join(", ") };
        let _ = writeln!(out, "- `{label}`: {rhs}");
    }
    if q.num_vertices() == 0 {
        out.push_str("- (empty quiver)\n");
    }
    out
}

/// `∘→∘←∘` when the underlying graph is a path, read from its first end
/// in vertex order.
pub fn line_shape(q: &Quiver) -> Option<String> {
    let n = q.num_vertices();
    if n == 0 || q.num_arrows() + 1 != n {
        return None;
    }
    let mut nbrs: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    for a in q.arrows() {
        if a.source == a.target {
            return None;
        }
        nbrs[a.source].push((a.target, true));
        nbrs[a.target].push((a.source, false));
    }
    if nbrs.iter().any(|x| x.len() > 2) {
        return None;
    }
    let mut cur = (0..n).find(|&v| nbrs[v].len() <= 1)?;
    let mut prev = usize::MAX;
    let mut s = String::from("∘");
    for _ in 1..n {
        let &(next, forward) = nbrs[cur].iter().find(|(w, _)| *w != prev)?;
        s.push(if forward { '→' } else { '←' });
        s.push('∘');
        (prev, cur) = (cur, next);
    }
    Some(s)
}

/// Radical layers with vertex labels, `-` for the zero module.
pub fn layers_cell(layers: &[Vec<usize>], labels: &[String]) -> String {
    if layers.is_empty() {
        return "-".into();
    }
    layers
        .iter()
        .map(|dims| {
            dims.iter()
                .enumerate()
                .flat_map(|(v, &d)| std::iter::repeat_n(labels[v].as_str(), d))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" / ")
}

/// Rows `Λ`, `τ₂⁻Λ`, ... with one column per indecomposable projective.
pub fn tau_table(rows: &[TauRow], labels: &[String], n: usize) -> String {
    let mut out = String::new();
    let heads: Vec<String> = labels.iter().map(|l| format!("P{l}")).collect();
    let _ = writeln!(out, "| | {} | total |", heads.join(" | "));
    let _ = writeln!(out, "|---|{}---|", "---|".repeat(labels.len()));
    for r in rows {
        let name = if r.power == 0 { "Λ".to_string() } else { format!("{}Λ", tau_minus(n, r.power)) };
        let cells: Vec<String> = r.layers.iter().map(|l| layers_cell(l, labels)).collect();
        let _ = writeln!(out, "| {name} | {} | {} |", cells.join(" | "), r.total);
    }
    out
}

fn outcome<T>(o: &Outcome<T>, show: impl Fn(&T) -> String) -> String {
    match o {
        Outcome::Ok { value } => show(value),
        Outcome::Unknown { reason } => format!("unknown ({reason})"),
        Outcome::Skipped { reason } => format!("skipped ({reason})"),
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or("above cap".into(), |d| d.to_string())
}

/// Presented endomorphism quivers point against the maps between summands;
/// the shape line reads them in the maps direction.
fn quiver_section(out: &mut String, title: &str, o: &Outcome<QuiverSummary>) {
    let _ = writeln!(out, "\n## {title}\n");
    match o {
        Outcome::Ok { value: q } => {
            let _ = writeln!(out, "dimension {}, global dimension {}\n", q.dim, opt(q.gldim));
            if let Some(s) = line_shape(&q.quiver.opposite()) {
                let _ = writeln!(out, "maps between summands: {s}\n");
            }
            out.push_str(&adjacency(&q.quiver));
        }
        _ => {
            let _ = writeln!(out, "{}", outcome(o, |_| String::new()));
        }
    }
}

pub fn analysis(r: &AnalysisReport, quiver: &Quiver, digest: &str) -> String {
    let n = r.n;
    let mut out = String::new();
    let _ = writeln!(out, "# Analysis of `{}`\n", r.algebra_id);
    let _ = writeln!(out, "- field {}, n = {n}", r.field);
    let _ = writeln!(out, "- input {digest}");
    let _ = writeln!(out, "- dimension {}, global dimension {}", r.dim, opt(r.gldim));
    let _ = writeln!(out, "\n## Quiver\n");
    out.push_str(&adjacency(quiver));

    let cv = &r.cross_validation;
    let dims = [cv.tensor, cv.module, cv.orbit].map(|d| d.map_or("-".into(), |x| x.to_string()));
    let rows = [
        (format!("τ{}-finite", subscript(n)), outcome(&r.tau_n_finite, |t| t.verdict.to_string())),
        (format!("{n}-representation-finite"), outcome(&r.n_rep_finite, |t| t.verdict.to_string())),
        ("Λ̃ self-injective".into(), outcome(&r.self_injective, |s| s.verdict.to_string())),
        ("vosnex".into(), outcome(&r.vosnex, |v| v.verdict.to_string())),
        ("Iwanaga-Gorenstein dimension of Λ̃".into(), outcome(&r.ig_dimension, |d| d.to_string())),
        ("Λ̃ rigid".into(), outcome(&r.rigidity, |b| b.to_string())),
        (format!("τ{} bijection on summands of Λ̃", subscript(n)), outcome(&r.tau_bijection, |t| t.holds.to_string())),
        ("Ext^i(DΛ, Λ̃) = 0 for 2 ≤ i < n".into(), outcome(&r.dual_ext_vanishes, |b| b.to_string())),
        ("Calabi-Yau spot check".into(), outcome(&r.cy_spot_check, |v| v.iter().all(|&b| b).to_string())),
        ("dim Λ̃ (tensor / module / orbit)".into(), format!("{} (agree: {})", dims.join(" / "), cv.agree)),
    ];
    let _ = writeln!(out, "\n## Checks\n\n| check | result |\n|---|---|");
    for (k, v) in rows {
        let _ = writeln!(out, "| {k} | {v} |");
    }

    if let Outcome::Ok { value: p } = &r.preprojective {
        let _ = writeln!(out, "\n## {} table\n", tau_minus(n, 1));
        out.push_str(&tau_table(&p.tau_table, &r.vertex_labels, n));
        let _ = writeln!(out, "\n## Λ̃\n");
        let _ = writeln!(out, "- dimension {}, graded pieces {:?}", p.dim, p.graded_dims);
        let _ = writeln!(out, "- {} basic summands, {} projective-free", p.basic_summands, p.projective_free_summands);
    }
    quiver_section(&mut out, "End(Λ̃)", &r.endomorphism);
    quiver_section(&mut out, "Γ, stable endomorphisms of the projective-free part", &r.gamma);
    out
}

pub fn preprojective(n: usize, dim: usize, graded: &[usize], quiver: &Quiver, spec: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Preprojective algebra, n = {n}\n");
    let _ = writeln!(out, "dimension {dim}, graded pieces {graded:?}\n");
    out.push_str(&adjacency(quiver));
    let _ = writeln!(out, "\n```\n{spec}```");
    out
}

pub fn verdict(label: &str, target: &str, v: Verdict, detail: &Value) -> String {
    let detail = serde_json::to_string_pretty(detail).expect("values serialize");
    format!("**{label}** ({target}): {v}\n\n```json\n{detail}\n```\n")
}

pub fn gamma(dim: usize, quiver: &Quiver, maps: &Quiver) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Γ\n\ndimension {dim}");
    if let Some(s) = line_shape(maps) {
        let _ = writeln!(out, "\nshape of the maps quiver: {s}");
    }
    let _ = writeln!(out, "\n## Presented quiver\n");
    out.push_str(&adjacency(quiver));
    let _ = writeln!(out, "\n## Maps between summands\n");
    out.push_str(&adjacency(maps));
    out
}

pub fn amiot(pieces: &BTreeMap<i64, usize>, total: usize) -> String {
    let mut out = String::from("| i | dim |\n|---|---|\n");
    for (i, d) in pieces {
        let _ = writeln!(out, "| {i} | {d} |");
    }
    let _ = writeln!(out, "| total | {total} |");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn layer_cells() {
        let l = labels(&["3", "4", "5", "6"]);
        assert_eq!(layers_cell(&[vec![0, 0, 0, 1], vec![0, 1, 1, 0]], &l), "6 / 4 5");
        assert_eq!(layers_cell(&[], &l), "-");
        assert_eq!(layers_cell(&[vec![2, 0, 0, 0]], &l), "3 3");
    }

    #[test]
    fn shapes() {
        let q = Quiver::from_labels(&["1", "2", "3"], &[("a", "1", "2"), ("b", "3", "2")]).unwrap();
        assert_eq!(line_shape(&q).as_deref(), Some("∘→∘←∘"));
        let cyc = Quiver::from_labels(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        assert_eq!(line_shape(&cyc), None);
        assert_eq!(tau_minus(2, 1), "τ₂⁻");
        assert_eq!(tau_minus(12, 3), "τ₁₂⁻³");
    }
}
