//! Additive structure of Grothendieck-Witt spectra of even Grassmannians.
//!
//! `GW^{[n]}(Gr(d, d+e))` with `d·e` even splits as `p` copies of
//! `GW^{[n]}(k)` and `q` copies of `K(k)`, where `p = C(d'+e', e')` counts
//! the partitions of the `d x e` frame fixed by the duality
//! `α ↦ e̲ − w₀α` and `q` counts the remaining dual pairs.
//!
//! - [`young`]: partitions in a frame, duality, half partitions, lattice paths
//! - [`rootdata`]: `GL_n` weights, `−w₀`, and signs of self-dual weights
//! - [`decomp`]: the decompositions themselves
//! - [`oracle`]: brute-force reference counts
//! - [`json`], [`cli`]: wire format and command-line front end

pub mod cli;
pub mod decomp;
pub mod error;
pub mod json;
pub mod oracle;
pub mod rootdata;
pub mod young;

use num_bigint::BigUint;

pub use decomp::{
    count_half_partitions, equivariant_gw, gw_grassmannian, gw_middle, gw_partial,
    middle_block_dual_check, BundleExpression, CountMethod, PartialDecomposition, Provenance,
    SpectrumDecomposition, Subject, Summand, Theory,
};
pub use error::{Error, Result};
pub use rootdata::{
    classify_box, dual_weight, sign_of, BoxCensus, RootDatumA, SignClass, WeightVector,
};
pub use young::{BinarySequence, Frame, Partition};

/// `C(n, k)` in arbitrary precision.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}
