//! Exact Euler characteristics of classifying spaces of discrete groups.
//!
//! For a finite group `G`, the height-n Euler characteristic of `BG` at a
//! prime `p` counts the conjugation orbits of commuting n-tuples of
//! p-power-order elements. This crate computes those censuses, models the
//! Burnside ring of classes `[G]` with its loop and p-typical shift
//! operators, and evaluates the invariants of infinite groups through
//! finite equivariant cell data (amalgam trees, the Soulé complex for
//! SL₃(ℤ)), clique profiles of right-angled Coxeter graphs, and closed
//! forms for arithmetic and mapping class groups.
//!
//! Everything is exact: counts are integers, orbifold values are
//! arbitrary-precision rationals, and no floating point appears anywhere.
//!
//! # Entry points
//!
//! * [`parse_group`] / [`FiniteGroup`] — permutation groups from specs like
//!   `"S4"`, `"D8"`, `"C2xC2"`, or explicit generators.
//! * [`census_naive`] / [`census_recursive`] / [`chi_kn_finite`] — orbit
//!   censuses of commuting tuples, by enumeration and by the centralizer
//!   recursion.
//! * [`BurnsideRing`] — the free abelian group on isomorphism classes of
//!   finite groups, with the characters `chi_orb`, `chi_Q`, `chi_K(n)`,
//!   `phi_K`, and the operators [`BurnsideRing::loop_op`] and
//!   [`BurnsideRing::p_shift`].
//! * [`ProperCellStructure`] — alternating-sum evaluation of equivariant
//!   cell data; [`amalgam`], [`sl2z_tree`] and [`soule_sl3`] are built in.
//! * [`coxeter`] — clique census of a defining graph and the resulting
//!   formulas for right-angled Coxeter groups.
//! * [`closed`] — closed forms for `SL₂(O_K)`, crystallographic groups,
//!   `GL/SL/Sp` of rank `p−1`, and mapping class groups, with bundled
//!   number-theoretic constants.
//! * [`report`] — character decomposition reports (summands, torus
//!   factors, rank bookkeeping).
//! * [`verify`] — the regression suite of published values.
//!
//! # Examples
//!
//! One runnable example per capability:
//!
//! ```text
//! cargo run --example group_toolkit            # groups, conjugacy, isomorphism
//! cargo run --example census_basics            # commuting-tuple censuses
//! cargo run --example burnside_operators       # ring, loop and shift operators
//! cargo run --example dihedral_amalgam         # D8 *_C4 D8 tree evaluation
//! cargo run --example modular_group            # SL2(Z) two ways
//! cargo run --example sl3z_complex             # the Soulé complex for SL3(Z)
//! cargo run --example coxeter_graphs           # right-angled Coxeter groups
//! cargo run --example arithmetic_closed_forms  # Sp, GL, mapping class groups
//! cargo run --example character_reports        # summand decompositions
//! ```
//!
//! The `orbichar` binary exposes the same functionality as subcommands;
//! `orbichar verify` runs every published-value check.

pub mod burnside;
pub mod cells;
pub mod census;
pub mod closed;
pub mod coxeter;
pub mod error;
pub mod group;
pub mod iso;
pub mod names;
pub mod perm;
pub mod rational;
pub mod report;
mod util;
pub mod verify;

pub use burnside::{BasisId, BurnsideClass, BurnsideRing};
pub use cells::{amalgam, amalgam_auto, sl2z_tree, soule_sl3, Cell, ProperCellStructure};
pub use census::{
    census_extended, census_naive, census_recursive, chi_kn_finite, p_power_elements,
    ExtendedTupleCensus, TupleCensus, TupleOrbit, DEFAULT_CENSUS_CAP,
};
pub use closed::{
    chi_crystallographic, chi_gl2_at_3, chi_gl_pminus1, chi_mapping_class, chi_sl2_ok,
    chi_sl2_ok_p2, chi_sl_pminus1, chi_sp_pminus1, Constants, MaximalSubgroupDatum, TorusSummands,
};
pub use coxeter::{chi_kn_coxeter, chi_orb_coxeter, clique_census, Graph, SphericalProfile};
pub use error::{Error, Result};
pub use group::{ConjugacyClasses, FiniteGroup, DEFAULT_MAX_ORDER};
pub use iso::{fingerprint, is_isomorphic, monomorphism_classes, GroupFingerprint};
pub use names::parse_group;
pub use perm::Permutation;
pub use rational::{ratio, Rational};
pub use report::{CharacterReport, Contribution, SummandGroup};
