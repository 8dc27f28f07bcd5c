use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver with labelled vertices and arrows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.as_str(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let mut labels = HashMap::new();
        for a in &arrows {
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::InvalidQuiver(format!("arrow `{}` has an undeclared endpoint", a.label)));
            }
            if labels.insert(a.label.as_str(), ()).is_some() || seen.contains_key(a.label.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate label `{}`", a.label)));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Build from labels, resolving arrow endpoints by vertex label.
    pub fn from_labels(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let vs: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let find = |l: &str| vs.iter().position(|v| v == l).ok_or_else(|| Error::UnknownVertex(l.to_string()));
        let mut arr = Vec::new();
        for (label, s, t) in arrows {
            arr.push(Arrow { label: label.to_string(), source: find(s)?, target: find(t)? });
        }
        Quiver::new(vs, arr)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_to(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// Same vertices and arrow labels, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { label: a.label.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    /// Arrow count between each ordered pair of vertices.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            m[a.source][a.target] += 1;
        }
        m
    }

    /// Whether the two quivers agree after relabelling vertices. Brute force
    /// over degree-compatible bijections; intended for small quivers.
    pub fn is_isomorphic(&self, other: &Quiver) -> bool {
        let n = self.num_vertices();
        if n != other.num_vertices() || self.num_arrows() != other.num_arrows() {
            return false;
        }
        let a = self.adjacency();
        let b = other.adjacency();
        let sig = |m: &Vec<Vec<usize>>, v: usize| {
            let mut out: Vec<usize> = m[v].clone();
            out.sort_unstable();
            let mut inn: Vec<usize> = (0..n).map(|u| m[u][v]).collect();
            inn.sort_unstable();
            (m[v][v], out, inn)
        };
        let sa: Vec<_> = (0..n).map(|v| sig(&a, v)).collect();
        let sb: Vec<_> = (0..n).map(|v| sig(&b, v)).collect();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn go(
            v: usize,
            n: usize,
            a: &[Vec<usize>],
            b: &[Vec<usize>],
            sa: &[(usize, Vec<usize>, Vec<usize>)],
            sb: &[(usize, Vec<usize>, Vec<usize>)],
            perm: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if v == n {
                return true;
            }
            for w in 0..n {
                if used[w] || sa[v] != sb[w] {
                    continue;
                }
                let ok = (0..v).all(|u| a[u][v] == b[perm[u]][w] && a[v][u] == b[w][perm[u]]);
                if !ok {
                    continue;
                }
                perm[v] = w;
                used[w] = true;
                if go(v + 1, n, a, b, sa, sb, perm, used) {
                    return true;
                }
                used[w] = false;
            }
            false
        }
        go(0, n, &a, &b, &sa, &sb, &mut perm, &mut used)
    }
}

/// A path: a start vertex and a composable arrow sequence, traversed left to
/// right. The empty sequence is the trivial path at `start`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { start: v, end: v, arrows: Vec::new() }
    }

    /// Composable arrow sequence, checked against the quiver.
    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let Some(&first) = arrows.first() else {
            return Err(Error::RelationIllFormed("empty path".into()));
        };
        for w in arrows.windows(2) {
            if q.arrow(w[0]).target != q.arrow(w[1]).source {
                return Err(Error::RelationIllFormed(format!(
                    "`{}*{}` is not composable",
                    q.arrow(w[0]).label,
                    q.arrow(w[1]).label
                )));
            }
        }
        let end = q.arrow(*arrows.last().unwrap()).target;
        Ok(Path { start: q.arrow(first).source, end, arrows })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn format(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertices()[self.start])
        } else {
            self.arrows.iter().map(|&a| q.arrow(a).label.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

/// A formal linear combination of paths.
#[derive(Debug, Clone, PartialEq)]
pub struct PathElement<F: crate::field::Field> {
    pub terms: Vec<(Path, F::Elem)>,
}

impl<F: crate::field::Field> PathElement<F> {
    pub fn new(terms: Vec<(Path, F::Elem)>) -> Self {
        PathElement { terms }
    }

    /// Common (source, target) of all terms, if they share one.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        let (p0, _) = self.terms.first()?;
        let ends = (p0.start, p0.end);
        self.terms.iter().all(|(p, _)| (p.start, p.end) == ends).then_some(ends)
    }

    pub fn reversed(&self) -> Self {
        PathElement {
            terms: self
                .terms
                .iter()
                .map(|(p, c)| {
                    let mut arrows = p.arrows.clone();
                    arrows.reverse();
                    (Path { start: p.end, end: p.start, arrows }, c.clone())
                })
                .collect(),
        }
    }

    pub fn format(&self, field: &F, q: &Quiver) -> String {
        let mut s = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let cs = field.format(c);
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, cs),
            };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if mag != "1" {
                s.push_str(&mag);
                s.push('*');
            }
            s.push_str(&p.format(q));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_arrows() {
        assert!(Quiver::from_labels(&["1", "2"], &[("a", "1", "3")]).is_err());
        assert!(Quiver::from_labels(&["1", "1"], &[]).is_err());
        assert!(Quiver::from_labels(&["1", "2"], &[("a", "1", "2"), ("a", "2", "1")]).is_err());
    }

    #[test]
    fn isomorphism_ignores_labels() {
        let a = Quiver::from_labels(&["x", "y", "z"], &[("p", "x", "y"), ("q", "z", "y")]).unwrap();
        let b = Quiver::from_labels(&["1", "2", "3"], &[("r", "2", "1"), ("s", "3", "1")]).unwrap();
        let c = Quiver::from_labels(&["1", "2", "3"], &[("r", "1", "2"), ("s", "1", "3")]).unwrap();
        assert!(a.is_isomorphic(&b));
        assert!(!a.is_isomorphic(&c));
        assert!(a.opposite().is_isomorphic(&c));
    }

    #[test]
    fn composability() {
        let q = Quiver::from_labels(&["1", "2", "3"], &[("a1", "1", "2"), ("a2", "2", "3")]).unwrap();
        assert!(Path::from_arrows(&q, vec![0, 1]).is_ok());
        assert!(matches!(Path::from_arrows(&q, vec![1, 0]), Err(Error::RelationIllFormed(_))));
    }
}
