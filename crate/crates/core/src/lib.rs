//! Diagram calculus for exotic Springer fibers of one-row bipartitions
//! `((k),(m-k))`.
//!
//! Irreducible components are indexed by one-boundary cup diagrams on `m`
//! vertices with `m-k` cups and half-cups. Each diagram `a` cuts out a
//! submanifold `S_a` of `(S²)^m`, and everything here is computed from those
//! diagrams: intersections of components, the affine paving by attracting
//! cells, a homology basis, the cohomology ring and the action of the type C
//! Weyl group on it.
//!
//! ```
//! use exotic_springer::circle::intersect;
//! use exotic_springer::diagram::enumerate;
//!
//! let comps = enumerate(4, 3).unwrap();
//! let words: Vec<String> = comps.iter().map(|a| a.word()).collect();
//! assert_eq!(words, ["()||", "|()|", "||()", "|||>"]);
//!
//! let r = intersect(&comps[0], &comps[1]).unwrap();
//! assert!(r.nonempty);
//! assert_eq!(r.cohomology_dim, 1);
//! ```
//!
//! All arithmetic is exact: integers and rationals are arbitrary precision
//! and points on the sphere have rational coordinates.

pub mod circle;
pub mod diagram;
pub mod homology;
pub mod linalg;
pub mod ring;
pub mod subset;
pub mod verify;
pub mod weyl;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/cup-diagrams.md")]
    mod cup_diagrams {}
    #[doc = include_str!("../../../book/src/intersections.md")]
    mod intersections {}
    #[doc = include_str!("../../../book/src/cells.md")]
    mod cells {}
    #[doc = include_str!("../../../book/src/homology.md")]
    mod homology {}
    #[doc = include_str!("../../../book/src/cohomology.md")]
    mod cohomology {}
    #[doc = include_str!("../../../book/src/weyl-group.md")]
    mod weyl_group {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
