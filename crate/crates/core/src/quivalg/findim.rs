use crate::exactla::Matrix;
use crate::field::Field;

/// An abstract finite-dimensional algebra: basis, structure constants and a
/// complete set of orthogonal idempotents.
#[derive(Debug, Clone, PartialEq)]
pub struct FinDimAlgebra<F: Field> {
    field: F,
    labels: Vec<String>,
    /// `mult[i * dim + j]` = sparse coordinates of `b_i * b_j`.
    mult: Vec<Vec<(usize, F::Elem)>>,
    idempotents: Vec<Vec<F::Elem>>,
    grading: Option<Vec<u32>>,
}

impl<F: Field> FinDimAlgebra<F> {
    pub fn new(
        field: &F,
        labels: Vec<String>,
        mult: Vec<Vec<(usize, F::Elem)>>,
        idempotents: Vec<Vec<F::Elem>>,
        grading: Option<Vec<u32>>,
    ) -> Self {
        let dim = labels.len();
        assert_eq!(mult.len(), dim * dim, "structure constant table has wrong size");
        FinDimAlgebra { field: field.clone(), labels, mult, idempotents, grading }
    }

    /// Build from a dense bilinear product given as a closure on basis indices.
    pub fn from_product(
        field: &F,
        labels: Vec<String>,
        idempotents: Vec<Vec<F::Elem>>,
        grading: Option<Vec<u32>>,
        mut product: impl FnMut(usize, usize) -> Vec<F::Elem>,
    ) -> Self {
        let dim = labels.len();
        let mut mult = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                mult.push(v.into_iter().enumerate().filter(|(_, c)| !field.is_zero(c)).collect());
            }
        }
        Self::new(field, labels, mult, idempotents, grading)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn idempotents(&self) -> &[Vec<F::Elem>] {
        &self.idempotents
    }
    pub fn grading(&self) -> Option<&[u32]> {
        self.grading.as_deref()
    }

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

    /// Matrix of `y -> x * y`.
    pub fn left_mult_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<Vec<F::Elem>> = (0..self.dim()).map(|j| self.multiply(x, &self.unit_vector(j))).collect();
        Matrix::from_columns(&self.field, self.dim(), &cols)
    }

    /// Matrix of `y -> y * x`.
    pub fn right_mult_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<Vec<F::Elem>> = (0..self.dim()).map(|j| self.multiply(&self.unit_vector(j), x)).collect();
        Matrix::from_columns(&self.field, self.dim(), &cols)
    }

    pub fn unit(&self) -> Vec<F::Elem> {
        let f = &self.field;
        let mut u = vec![f.zero(); self.dim()];
        for e in &self.idempotents {
            for (a, b) in u.iter_mut().zip(e) {
                *a = f.add(a, b);
            }
        }
        u
    }

    /// Associativity on all basis triples, orthogonality of the idempotents
    /// and that they sum to a two-sided identity.
    pub fn check_axioms(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.multiply(&self.unit_vector(i), &self.unit_vector(j));
                for k in 0..n {
                    let ek = self.unit_vector(k);
                    let left = self.multiply(&ij, &ek);
                    let jk = self.multiply(&self.unit_vector(j), &ek);
                    if left != self.multiply(&self.unit_vector(i), &jk) {
                        return false;
                    }
                }
            }
        }
        let zero = vec![self.field.zero(); n];
        for (a, ea) in self.idempotents.iter().enumerate() {
            for (b, eb) in self.idempotents.iter().enumerate() {
                let p = self.multiply(ea, eb);
                if (a == b && &p != ea) || (a != b && p != zero) {
                    return false;
                }
            }
        }
        let u = self.unit();
        (0..n).all(|i| {
            let b = self.unit_vector(i);
            self.multiply(&u, &b) == b && self.multiply(&b, &u) == b
        })
    }

    /// The opposite algebra on the same basis.
    pub fn opposite(&self) -> Self {
        let n = self.dim();
        let mut mult = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                mult[i * n + j] = self.mult[j * n + i].clone();
            }
        }
        FinDimAlgebra {
            field: self.field.clone(),
            labels: self.labels.clone(),
            mult,
            idempotents: self.idempotents.clone(),
            grading: self.grading.clone(),
        }
    }

    /// Dimension of the degree-`d` part, when graded.
    pub fn graded_dims(&self) -> Option<Vec<usize>> {
        let g = self.grading.as_ref()?;
        let top = g.iter().copied().max().unwrap_or(0) as usize;
        let mut out = vec![0; top + 1];
        for &d in g {
            out[d as usize] += 1;
        }
        Some(out)
    }
}
