//! The (n+1)-preprojective algebra, as a module and as a tensor algebra,
//! and stable endomorphism algebras.

mod module;
mod stable;
mod tensor;

pub use module::{preprojective_module, tau_n_inv_iterates, PreprojectiveSplit, DEFAULT_TAU_CAP};
pub use stable::{stable_endomorphism, stable_endomorphism_algebra, stable_hom, StableAuslander, StableHom};
pub use tensor::{ext_bimodule, preprojective_algebra, ExtBimodule, PreprojectiveAlgebra};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{auslander_algebra, dynkin_path_algebra, linear_nakayama};
    use crate::field::PrimeField;
    use crate::quivalg::{algebra_from_strings, quiver_presentation, Algebra, Quiver};
    use crate::repmod::{is_isomorphic, Representation};

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn a2() -> Algebra<PrimeField> {
        dynkin_path_algebra(&f(), &[true]).unwrap()
    }

    fn aus_a3() -> Algebra<PrimeField> {
        auslander_algebra(&dynkin_path_algebra(&f(), &[false, true]).unwrap()).unwrap()
    }

    #[test]
    fn semisimple_has_trivial_bimodule() {
        let a = algebra_from_strings(&f(), &["1", "2"], &[], &[]).unwrap();
        assert_eq!(ext_bimodule(&a, 1).unwrap().dim, 0);
        let p = preprojective_algebra(&a, 1, 8).unwrap();
        assert_eq!(p.algebra.dim(), 2);
    }

    #[test]
    fn a2_preprojective() {
        let a = a2();
        let e = ext_bimodule(&a, 1).unwrap();
        assert_eq!(e.dim, 1);
        assert!(e.actions_commute());
        let m = preprojective_module(&a, 1, 8).unwrap();
        assert_eq!(m.dim(), 4);
        assert_eq!(m.summands.len(), 3);
        assert_eq!(m.p_free_summands().len(), 1);
        assert!(is_isomorphic(&m.p_free, &Representation::simple(&a, 0)).unwrap());
        let p = preprojective_algebra(&a, 1, 8).unwrap();
        assert_eq!(p.algebra.dim(), 4);
        assert!(p.algebra.check_axioms());
        let pres = quiver_presentation(&p.algebra).unwrap();
        let q = pres.algebra.quiver();
        assert_eq!((q.num_vertices(), q.num_arrows()), (2, 2));
        // both 2-cycles vanish
        assert_eq!(pres.algebra.relations().len(), 2);
    }

    #[test]
    fn nakayama_preprojective_is_cyclic_triangle() {
        let a = linear_nakayama(&f(), 3).unwrap();
        let m = preprojective_module(&a, 2, 8).unwrap();
        assert_eq!(m.dim(), 6);
        assert!(is_isomorphic(&m.p_free, &Representation::simple(&a, 0)).unwrap());
        let p = preprojective_algebra(&a, 2, 8).unwrap();
        assert_eq!(p.graded_dims, vec![5, 1]);
        let pres = quiver_presentation(&p.algebra).unwrap();
        let tri = Quiver::from_labels(&["a", "b", "c"], &[("x", "a", "b"), ("y", "b", "c"), ("z", "c", "a")]).unwrap();
        assert!(pres.algebra.quiver().is_isomorphic(&tri));
        assert_eq!(pres.algebra.dim(), 6);
    }

    #[test]
    fn auslander_a3_split_and_bimodule() {
        let a = aus_a3();
        let e = ext_bimodule(&a, 2).unwrap();
        assert_eq!(e.dim, 5);
        assert!(e.actions_commute());
        let m = preprojective_module(&a, 2, 8).unwrap();
        assert_eq!(m.graded_dims(), vec![15, 5]);
        let pf = m.p_free_summands();
        assert_eq!(pf.len(), 3);
        let mut dims: Vec<usize> = pf.iter().map(Representation::dim).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 3]);
        let p = preprojective_algebra(&a, 2, 8).unwrap();
        assert_eq!(p.graded_dims, m.graded_dims());
        assert!(p.algebra.check_axioms());
    }

    #[test]
    fn stable_hom_examples() {
        let a = a2();
        let s1 = Representation::simple(&a, 0);
        assert_eq!(stable_hom(&s1, &s1).unwrap().dim(), 1);
        let p1 = Representation::projective(&a, 0);
        assert_eq!(stable_hom(&s1, &p1).unwrap().dim(), 0);
        assert_eq!(stable_hom(&p1, &s1).unwrap().dim(), 0);
        let g = stable_endomorphism(&a, 1, 8).unwrap();
        assert_eq!(g.algebra.dim(), 1);
    }

    #[test]
    fn gamma_of_auslander_a3() {
        let g = stable_endomorphism(&aus_a3(), 2, 8).unwrap();
        assert_eq!(g.algebra.dim(), 5);
        assert!(g.algebra.check_axioms());
        assert!(g.p_free_hom_vanishes);
        assert_eq!(g.identification_holds().unwrap(), Some(true));
        let pres = quiver_presentation(&g.algebra).unwrap();
        // a source with two arrows out under f·g = f∘g
        let q = Quiver::from_labels(&["1", "2", "3"], &[("a", "2", "1"), ("b", "2", "3")]).unwrap();
        assert!(pres.algebra.quiver().is_isomorphic(&q));
        assert!(pres.algebra.relations().is_empty());
    }

    #[test]
    fn auslander_a4_preprojective_presentation() {
        let a = auslander_algebra(&dynkin_path_algebra(&f(), &[true; 3]).unwrap()).unwrap();
        let p = preprojective_algebra(&a, 2, 8).unwrap();
        assert_eq!(p.graded_dims, vec![35, 15, 5, 1]);
        let pres = quiver_presentation(&p.algebra).unwrap();
        let q = pres.algebra.quiver();
        assert_eq!((q.num_vertices(), q.num_arrows()), (10, 18));
    }
}
