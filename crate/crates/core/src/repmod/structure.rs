use crate::exactla::{Matrix, RowSpace};
use crate::field::Field;
use crate::repmod::projmap::{map_from_projectives, projective_sum};
use crate::repmod::rep::{ModuleMap, Representation};

/// Radical, top and socle of a module together with the structure maps.
#[derive(Clone, Debug)]
pub struct Structure<F: Field> {
    pub radical: Representation<F>,
    pub radical_inclusion: ModuleMap<F>,
    pub top: Representation<F>,
    pub top_projection: ModuleMap<F>,
    pub socle: Representation<F>,
    pub socle_inclusion: ModuleMap<F>,
}

/// Per-vertex bases of `rad M`, the sum of the images of all arrows.
pub fn radical_bases<F: Field>(m: &Representation<F>) -> Vec<Matrix<F>> {
    let f = m.field();
    let q = m.algebra().quiver();
    (0..q.num_vertices())
        .map(|v| {
            let mut s = RowSpace::new(f, m.dims()[v]);
            for a in q.arrows_to(v) {
                for col in m.map(a).column_vectors() {
                    s.insert(col);
                }
            }
            s.as_columns()
        })
        .collect()
}

/// Per-vertex bases of the socle: vectors killed by every arrow.
pub fn socle_bases<F: Field>(m: &Representation<F>) -> Vec<Matrix<F>> {
    let f = m.field();
    let q = m.algebra().quiver();
    (0..q.num_vertices())
        .map(|v| {
            let mut stacked = Matrix::zeros(f, 0, m.dims()[v]);
            for a in q.arrows_from(v) {
                stacked = stacked.vstack(m.map(a));
            }
            stacked.null_space()
        })
        .collect()
}

pub fn structure<F: Field>(m: &Representation<F>) -> Structure<F> {
    let rad = radical_bases(m);
    let (radical, radical_inclusion) = m.restrict(&rad);
    let (top, top_projection) = m.quotient(&rad);
    let (socle, socle_inclusion) = m.restrict(&socle_bases(m));
    Structure { radical, radical_inclusion, top, top_projection, socle, socle_inclusion }
}

/// `M` is projective iff it has the dimension of the projective cover of its top.
pub fn is_projective_module<F: Field>(m: &Representation<F>) -> bool {
    let a = m.algebra();
    let cover: usize = top_dims(m).iter().enumerate().map(|(v, &t)| t * Representation::projective(a, v).dim()).sum();
    cover == m.dim()
}

pub fn is_injective_module<F: Field>(m: &Representation<F>) -> bool {
    is_projective_module(&m.dual())
}

/// Dimension vector of the top.
pub fn top_dims<F: Field>(m: &Representation<F>) -> Vec<usize> {
    radical_bases(m).iter().zip(m.dims()).map(|(r, d)| d - r.cols()).collect()
}

pub fn socle_dims<F: Field>(m: &Representation<F>) -> Vec<usize> {
    socle_bases(m).iter().map(Matrix::cols).collect()
}

/// Radical layers `rad^i M / rad^{i+1} M` as dimension vectors.
pub fn radical_layers<F: Field>(m: &Representation<F>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = m.clone();
    while !cur.is_zero() {
        let rad = radical_bases(&cur);
        out.push(rad.iter().zip(cur.dims()).map(|(r, d)| d - r.cols()).collect());
        cur = cur.restrict(&rad).0;
    }
    out
}

/// Top generators: for each vertex a complement of the radical chosen among
/// standard basis vectors.
pub fn top_generators<F: Field>(m: &Representation<F>) -> Vec<(usize, Vec<F::Elem>)> {
    let f = m.field();
    let mut gens = Vec::new();
    for (v, rad) in radical_bases(m).iter().enumerate() {
        let d = m.dims()[v];
        let mut s = RowSpace::spanned_by(f, d, rad.column_vectors());
        for k in 0..d {
            let e: Vec<F::Elem> = (0..d).map(|i| if i == k { f.one() } else { f.zero() }).collect();
            if s.insert(e.clone()) {
                gens.push((v, e));
            }
        }
    }
    gens
}

/// Projective cover `P -> M` with `P = ⊕ P_{vertices[g]}`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover<F: Field> {
    pub vertices: Vec<usize>,
    pub generators: Vec<Vec<F::Elem>>,
    pub map: ModuleMap<F>,
}

pub fn projective_cover<F: Field>(m: &Representation<F>) -> ProjectiveCover<F> {
    let gens = top_generators(m);
    let vertices: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    let generators: Vec<Vec<F::Elem>> = gens.into_iter().map(|(_, g)| g).collect();
    let map = if vertices.is_empty() {
        ModuleMap::zero(&Representation::zero(m.algebra()), m)
    } else {
        map_from_projectives(m.algebra(), &vertices, m, &generators)
    };
    ProjectiveCover { vertices, generators, map }
}

/// Injective envelope `M -> ⊕ I_{vertices[g]}`, dual to the projective cover
/// of `D M` over the opposite algebra.
#[derive(Clone, Debug)]
pub struct InjectiveEnvelope<F: Field> {
    pub vertices: Vec<usize>,
    pub map: ModuleMap<F>,
}

pub fn injective_envelope<F: Field>(m: &Representation<F>) -> InjectiveEnvelope<F> {
    let cover = projective_cover(&m.dual());
    let map = cover.map.dual().retarget(m, &injective_sum(m.algebra(), &cover.vertices));
    InjectiveEnvelope { vertices: cover.vertices, map }
}

/// `⊕_h I_{vertices[h]}`, the dual of the projective sum over the opposite algebra.
pub fn injective_sum<F: Field>(algebra: &crate::quivalg::Algebra<F>, vertices: &[usize]) -> Representation<F> {
    projective_sum(&algebra.opposite(), vertices).dual()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::quivalg::algebra_from_strings;

    #[test]
    fn structure_of_small_modules() {
        let a = algebra_from_strings(&Rationals, &["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        let s1 = Representation::simple(&a, 0);
        let st = structure(&s1);
        assert_eq!(st.top.dims(), &[1, 0]);
        assert_eq!(st.socle.dims(), &[1, 0]);
        assert!(st.radical.is_zero());
        let p1 = Representation::projective(&a, 0);
        let st = structure(&p1);
        assert_eq!(st.top.dims(), &[1, 0]);
        assert_eq!(st.radical.dims(), &[0, 1]);
        assert_eq!(st.socle.dims(), &[0, 1]);
    }

    #[test]
    fn covers_and_envelopes() {
        let a = algebra_from_strings(&Rationals, &["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        let s1 = Representation::simple(&a, 0);
        let c = projective_cover(&s1);
        assert_eq!(c.vertices, vec![0]);
        assert!(c.map.is_surjective() && c.map.is_homomorphism());
        assert_eq!(c.map.kernel().0.dims(), &[0, 1]);
        let p = Representation::projective(&a, 0);
        assert!(projective_cover(&p).map.is_iso());
        assert!(projective_cover(&Representation::zero(&a)).vertices.is_empty());
        let e = injective_envelope(&Representation::simple(&a, 1));
        assert_eq!(e.vertices, vec![1]);
        assert!(e.map.is_injective() && e.map.is_homomorphism());
        assert_eq!(e.map.target.dims(), &[1, 1]);
    }
}
