use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::quivalg::findim::FinDimAlgebra;
use crate::quivalg::groebner::{self, Poly, Rule, Word};
use crate::quivalg::quiver::{Path, PathElement, Quiver};

/// Default cap on the length of irreducible paths.
pub const DEFAULT_PATH_CAP: usize = 64;

/// Shared handle to a bound quiver algebra; modules keep one of these.
pub type Algebra<F> = Arc<BoundQuiverAlgebra<F>>;

/// `kQ/I` with an explicit path basis and multiplication table.
///
/// Multiplication is concatenation: `x * y` is `x` followed by `y`.
#[derive(Debug)]
pub struct BoundQuiverAlgebra<F: Field> {
    field: F,
    quiver: Quiver,
    relations: Vec<PathElement<F>>,
    groebner: Vec<Rule<F>>,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    mult: Vec<Vec<(usize, F::Elem)>>,
    blocks: Vec<Vec<Vec<usize>>>,
    arrow_degrees: Option<Vec<u32>>,
    fingerprint: u64,
    opposite: OnceLock<Arc<BoundQuiverAlgebra<F>>>,
    opposite_of: Option<Weak<BoundQuiverAlgebra<F>>>,
}

fn fingerprint<F: Field>(quiver: &Quiver, basis: &[Path], mult: &[Vec<(usize, F::Elem)>]) -> u64 {
    let mut h = DefaultHasher::new();
    quiver.hash(&mut h);
    basis.hash(&mut h);
    mult.hash(&mut h);
    h.finish()
}

impl<F: Field> BoundQuiverAlgebra<F> {
    /// Complete `relations` to a Gröbner basis and build the algebra.
    pub fn new(field: &F, quiver: Quiver, relations: Vec<PathElement<F>>) -> Result<Algebra<F>> {
        Self::with_cap(field, quiver, relations, DEFAULT_PATH_CAP)
    }

    pub fn with_cap(field: &F, quiver: Quiver, relations: Vec<PathElement<F>>, cap: usize) -> Result<Algebra<F>> {
        let mut polys = Vec::new();
        for rel in &relations {
            if rel.terms.is_empty() {
                continue;
            }
            if rel.endpoints().is_none() {
                return Err(Error::RelationIllFormed(format!(
                    "`{}` mixes paths with different endpoints",
                    rel.format(field, &quiver)
                )));
            }
            let mut p = Poly::<F>::new();
            for (path, c) in &rel.terms {
                if path.len() < 2 {
                    return Err(Error::RelationIllFormed(format!(
                        "`{}` has a term of length < 2",
                        rel.format(field, &quiver)
                    )));
                }
                // re-validate composability
                Path::from_arrows(&quiver, path.arrows.clone())?;
                let w = Word(path.arrows.clone());
                let v = match p.remove(&w) {
                    Some(old) => field.add(&old, c),
                    None => c.clone(),
                };
                if !field.is_zero(&v) {
                    p.insert(w, v);
                }
            }
            if !p.is_empty() {
                polys.push(p);
            }
        }
        let rw = groebner::complete(field, polys, cap)?;

        // normal words by breadth-first extension; proper prefixes of normal
        // words are normal, so only suffixes need checking
        let mut basis: Vec<Path> = (0..quiver.num_vertices()).map(Path::trivial).collect();
        let mut queue: VecDeque<Path> = VecDeque::new();
        for a in 0..quiver.num_arrows() {
            if rw.is_normal(&[a]) {
                let p = Path::from_arrows(&quiver, vec![a])?;
                queue.push_back(p);
            }
        }
        while let Some(p) = queue.pop_front() {
            if p.len() > cap {
                return Err(Error::NonAdmissible { cap });
            }
            for a in quiver.arrows_from(p.end) {
                let mut w = p.arrows.clone();
                w.push(a);
                if rw.suffix_normal(&w) {
                    queue.push_back(Path { start: p.start, end: quiver.arrow(a).target, arrows: w });
                }
            }
            basis.push(p);
        }
        let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let dim = basis.len();
        let mut mult = vec![Vec::new(); dim * dim];
        for (i, p) in basis.iter().enumerate() {
            for (j, q) in basis.iter().enumerate() {
                if p.end != q.start {
                    continue;
                }
                if p.is_trivial() {
                    mult[i * dim + j] = vec![(j, field.one())];
                    continue;
                }
                if q.is_trivial() {
                    mult[i * dim + j] = vec![(i, field.one())];
                    continue;
                }
                let mut w = p.arrows.clone();
                w.extend_from_slice(&q.arrows);
                let nf = rw.reduce_word(&w);
                let mut entry: Vec<(usize, F::Elem)> = nf
                    .into_iter()
                    .map(|(word, c)| {
                        let path = Path { start: p.start, end: q.end, arrows: word.0 };
                        (index[&path], c)
                    })
                    .collect();
                entry.sort_by_key(|e| e.0);
                mult[i * dim + j] = entry;
            }
        }
        Ok(Arc::new(Self::assemble(field, quiver, relations, rw.rules().to_vec(), basis, mult, None)))
    }

    fn assemble(
        field: &F,
        quiver: Quiver,
        relations: Vec<PathElement<F>>,
        groebner: Vec<Rule<F>>,
        basis: Vec<Path>,
        mult: Vec<Vec<(usize, F::Elem)>>,
        opposite_of: Option<Weak<Self>>,
    ) -> Self {
        let n = quiver.num_vertices();
        let mut blocks = vec![vec![Vec::new(); n]; n];
        for (i, p) in basis.iter().enumerate() {
            blocks[p.start][p.end].push(i);
        }
        let index = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let fingerprint = fingerprint::<F>(&quiver, &basis, &mult);
        BoundQuiverAlgebra {
            field: field.clone(),
            quiver,
            relations,
            groebner,
            basis,
            index,
            mult,
            blocks,
            arrow_degrees: None,
            fingerprint,
            opposite: OnceLock::new(),
            opposite_of,
        }
    }

    /// Attach a grading by arrow degrees.
    pub fn with_arrow_degrees(self: &Arc<Self>, degrees: Vec<u32>) -> Algebra<F> {
        assert_eq!(degrees.len(), self.quiver.num_arrows());
        let mut a = Self::assemble(
            &self.field,
            self.quiver.clone(),
            self.relations.clone(),
            self.groebner.clone(),
            self.basis.clone(),
            self.mult.clone(),
            None,
        );
        a.arrow_degrees = Some(degrees);
        Arc::new(a)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn relations(&self) -> &[PathElement<F>] {
        &self.relations
    }
    pub fn groebner_basis(&self) -> &[Rule<F>] {
        &self.groebner
    }
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }
    pub fn arrow_degrees(&self) -> Option<&[u32]> {
        self.arrow_degrees.as_deref()
    }
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Structural equality: same quiver, basis and multiplication table.
    pub fn same_as(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.fingerprint == other.fingerprint
                && self.quiver == other.quiver
                && self.basis == other.basis
                && self.mult == other.mult)
    }

    pub fn path_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Basis index of the trivial path at `v`.
    pub fn vertex_basis_index(&self, v: usize) -> usize {
        v
    }

    /// Basis index of arrow `a` (arrows are always irreducible).
    pub fn arrow_basis_index(&self, a: usize) -> usize {
        let arr = self.quiver.arrow(a);
        self.index[&Path { start: arr.source, end: arr.target, arrows: vec![a] }]
    }

    /// Indices of the basis paths from `u` to `v`, i.e. a basis of `e_u A e_v`.
    pub fn block(&self, u: usize, v: usize) -> &[usize] {
        &self.blocks[u][v]
    }

    /// Structure constants of `b_i * b_j`.
    pub fn mult_basis(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.mult[i * self.dim() + j]
    }

    pub fn multiply(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, s) in self.mult_basis(i, j) {
                    out[*k] = f.add(&out[*k], &f.mul(&c, s));
                }
            }
        }
        out
    }

    pub fn unit_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    /// Coordinates of a path (reduced through the multiplication table).
    pub fn path_element(&self, p: &Path) -> Vec<F::Elem> {
        let mut acc = self.unit_vector(p.start);
        for &a in &p.arrows {
            acc = self.multiply(&acc, &self.unit_vector(self.arrow_basis_index(a)));
        }
        acc
    }

    pub fn element(&self, e: &PathElement<F>) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (p, c) in &e.terms {
            for (o, x) in out.iter_mut().zip(self.path_element(p)) {
                *o = f.add(o, &f.mul(c, &x));
            }
        }
        out
    }

    /// Degree of a basis path under the arrow grading (length if ungraded).
    pub fn path_degree(&self, i: usize) -> u32 {
        let p = &self.basis[i];
        match &self.arrow_degrees {
            Some(d) => p.arrows.iter().map(|&a| d[a]).sum(),
            None => p.len() as u32,
        }
    }

    /// The opposite algebra: arrows and paths reversed with the same basis
    /// indexing. Cached, and `A.opposite().opposite()` is `A` itself.
    pub fn opposite(self: &Arc<Self>) -> Algebra<F> {
        if let Some(orig) = self.opposite_of.as_ref().and_then(Weak::upgrade) {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let dim = self.dim();
                let basis: Vec<Path> = self
                    .basis
                    .iter()
                    .map(|p| {
                        let mut arrows = p.arrows.clone();
                        arrows.reverse();
                        Path { start: p.end, end: p.start, arrows }
                    })
                    .collect();
                let mut mult = vec![Vec::new(); dim * dim];
                for i in 0..dim {
                    for j in 0..dim {
                        mult[i * dim + j] = self.mult[j * dim + i].clone();
                    }
                }
                let mut op = Self::assemble(
                    &self.field,
                    self.quiver.opposite(),
                    self.relations.iter().map(PathElement::reversed).collect(),
                    Vec::new(),
                    basis,
                    mult,
                    Some(Arc::downgrade(self)),
                );
                op.arrow_degrees = self.arrow_degrees.clone();
                Arc::new(op)
            })
            .clone()
    }

    /// The underlying abstract algebra with vertex idempotents.
    pub fn to_findim(&self) -> FinDimAlgebra<F> {
        let f = &self.field;
        let labels = self.basis.iter().map(|p| p.format(&self.quiver)).collect();
        let idempotents = (0..self.num_vertices()).map(|v| self.unit_vector(v)).collect();
        let grading = self.arrow_degrees.as_ref().map(|_| (0..self.dim()).map(|i| self.path_degree(i)).collect());
        FinDimAlgebra::new(f, labels, self.mult.clone(), idempotents, grading)
    }

    /// Paths of the basis starting at `v`, in basis order.
    pub fn paths_from(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].start == v).collect()
    }

    /// Paths of the basis ending at `v`, in basis order.
    pub fn paths_to(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].end == v).collect()
    }

    pub fn format_element(&self, x: &[F::Elem]) -> String {
        let terms: Vec<(Path, F::Elem)> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| (self.basis[i].clone(), c.clone()))
            .collect();
        PathElement::<F>::new(terms).format(&self.field, &self.quiver)
    }
}

/// Build an algebra from vertex labels, arrows `(label, source, target)` and
/// relations in the text syntax `a1*a2 - 2*b1*b2`.
pub fn algebra_from_strings<F: Field>(
    field: &F,
    vertices: &[&str],
    arrows: &[(&str, &str, &str)],
    relations: &[&str],
) -> Result<Algebra<F>> {
    let quiver = Quiver::from_labels(vertices, arrows)?;
    let rels = relations.iter().map(|r| parse_relation(field, &quiver, r)).collect::<Result<Vec<_>>>()?;
    BoundQuiverAlgebra::new(field, quiver, rels)
}

/// Parse a signed linear combination of `*`-separated arrow paths.
/// Coefficients are integers or fractions `p/q`, written before the path.
pub fn parse_relation<F: Field>(field: &F, quiver: &Quiver, text: &str) -> Result<PathElement<F>> {
    use num_bigint::BigInt;
    let ill = |msg: String| Error::RelationIllFormed(msg);
    let mut terms = Vec::new();
    let src = text.replace(' ', "");
    if src.is_empty() {
        return Err(ill("empty relation".into()));
    }
    // split into signed terms
    let mut chunks: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for ch in src.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() {
            chunks.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if (ch == '+' || ch == '-') && cur.is_empty() {
            if ch == '-' {
                neg = !neg;
            }
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(ill(format!("dangling sign in `{text}`")));
    }
    chunks.push((neg, cur));
    for (neg, chunk) in chunks {
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        let mut arrows = Vec::new();
        for tok in chunk.split('*') {
            if tok.is_empty() {
                return Err(ill(format!("empty factor in `{text}`")));
            }
            if tok.chars().next().unwrap().is_ascii_digit() && arrows.is_empty() && quiver.arrow_index(tok).is_none() {
                let (n, d) = match tok.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (tok, "1"),
                };
                let n: BigInt = n.parse().map_err(|_| ill(format!("bad coefficient `{tok}`")))?;
                let d: BigInt = d.parse().map_err(|_| ill(format!("bad coefficient `{tok}`")))?;
                num *= n;
                den *= d;
            } else {
                let a = quiver.arrow_index(tok).ok_or_else(|| Error::UnknownArrow(tok.to_string()))?;
                arrows.push(a);
            }
        }
        if neg {
            num = -num;
        }
        let c = field.from_ratio(&num, &den).ok_or_else(|| ill(format!("coefficient vanishes denominator in `{text}`")))?;
        let path = Path::from_arrows(quiver, arrows)?;
        terms.push((path, c));
    }
    Ok(PathElement::new(terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn a3_rel() -> Algebra<Rationals> {
        algebra_from_strings(&Rationals, &["1", "2", "3"], &[("a1", "1", "2"), ("a2", "2", "3")], &["a1*a2"]).unwrap()
    }

    #[test]
    fn a2_has_three_paths() {
        let a = algebra_from_strings(&Rationals, &["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        assert_eq!(a.dim(), 3);
    }

    #[test]
    fn linear_a3_with_relation() {
        let a = a3_rel();
        assert_eq!(a.dim(), 5);
        let labels: Vec<String> = a.basis().iter().map(|p| p.format(a.quiver())).collect();
        assert_eq!(labels, vec!["e1", "e2", "e3", "a1", "a2"]);
        let x = a.unit_vector(a.arrow_basis_index(0));
        let y = a.unit_vector(a.arrow_basis_index(1));
        assert!(a.multiply(&x, &y).iter().all(|c| Rationals.is_zero(c)));
    }

    #[test]
    fn idempotents() {
        let a = a3_rel();
        let e1 = a.unit_vector(0);
        let e2 = a.unit_vector(1);
        assert_eq!(a.multiply(&e1, &e1), e1);
        assert!(a.multiply(&e1, &e2).iter().all(|c| Rationals.is_zero(c)));
        // sum of idempotents acts as identity on every basis element
        let one: Vec<_> = (0..a.dim()).map(|i| if i < 3 { Rationals.one() } else { Rationals.zero() }).collect();
        for i in 0..a.dim() {
            let b = a.unit_vector(i);
            assert_eq!(a.multiply(&one, &b), b);
            assert_eq!(a.multiply(&b, &one), b);
        }
    }

    #[test]
    fn cyclic_triangle_rad_square_zero() {
        let f = PrimeField::default();
        let a = algebra_from_strings(
            &f,
            &["1", "2", "3"],
            &[("x", "1", "2"), ("y", "2", "3"), ("z", "3", "1")],
            &["x*y", "y*z", "z*x"],
        )
        .unwrap();
        assert_eq!(a.dim(), 6);
    }

    #[test]
    fn relation_order_does_not_change_dim() {
        let f = PrimeField::default();
        let v = ["1", "2", "3", "4"];
        let arr = [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")];
        let x = algebra_from_strings(&f, &v, &arr, &["a*b - c*d"]).unwrap();
        let y = algebra_from_strings(&f, &v, &arr, &["c*d - a*b"]).unwrap();
        assert_eq!(x.dim(), 9);
        assert_eq!(x.dim(), y.dim());
    }

    #[test]
    fn opposite_is_involutive() {
        let a = a3_rel();
        let op = a.opposite();
        assert_eq!(op.dim(), 5);
        assert_eq!(op.quiver().arrow(0).source, 1);
        assert_eq!(op.relations()[0].terms[0].0.arrows, vec![1, 0]);
        let back = op.opposite();
        assert!(Arc::ptr_eq(&back, &a));
        // a2op * a1op = 0 in the opposite
        let x = op.unit_vector(op.arrow_basis_index(1));
        let y = op.unit_vector(op.arrow_basis_index(0));
        assert!(op.multiply(&x, &y).iter().all(|c| Rationals.is_zero(c)));
    }

    #[test]
    fn rejects_non_admissible_and_ill_formed() {
        let f = PrimeField::default();
        let loop_q = algebra_from_strings(&f, &["1"], &[("x", "1", "1")], &[]);
        assert_eq!(loop_q.unwrap_err(), Error::NonAdmissible { cap: DEFAULT_PATH_CAP });
        let bad = algebra_from_strings(&f, &["1", "2", "3"], &[("a1", "1", "2"), ("a2", "2", "3")], &["a2*a1"]);
        assert!(matches!(bad, Err(Error::RelationIllFormed(_))));
    }

    #[test]
    fn non_homogeneous_relation() {
        // relation between paths of lengths 3 and 2
        let f = PrimeField::default();
        let a = algebra_from_strings(
            &f,
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "2")],
            &["c*d*b - a*b"],
        )
        .unwrap();
        // e1..e4, a, b, c, d, ab, cd, db, cdb, minus one relation
        assert_eq!(a.dim(), 11);
    }
}
