//! Finite proper equivariant cell data: the alternating-sum evaluator, the
//! cell-to-Burnside-class map, and built-in complexes (amalgam trees and
//! Soulé's complex for SL₃(ℤ)).

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::burnside::{BurnsideClass, BurnsideRing};
use crate::census;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::iso;
use crate::names;
use crate::perm::Permutation;
use crate::rational::Rational;

/// One equivariant cell orbit: a dimension, the stabilizer of the cell, and
/// how many orbit cells share this data. Free cells carry the trivial group.
#[derive(Debug, Clone)]
pub struct Cell {
    pub dim: u32,
    pub stabilizer: FiniteGroup,
    pub multiplicity: u32,
}

/// A finite proper G-CW shape, recorded through its equivariant cells.
#[derive(Debug, Clone)]
pub struct ProperCellStructure {
    pub label: String,
    pub cells: Vec<Cell>,
}

impl ProperCellStructure {
    pub fn new(label: impl Into<String>, cells: Vec<Cell>) -> Self {
        ProperCellStructure {
            label: label.into(),
            cells,
        }
    }

    /// The class `Σ (−1)^dim · multiplicity · [stabilizer]`.
    pub fn to_burnside_class(&self, ring: &BurnsideRing) -> BurnsideClass {
        let mut out = BurnsideClass::zero();
        for cell in &self.cells {
            let sign = if cell.dim % 2 == 0 { 1 } else { -1 };
            let term = ring
                .class_of(&cell.stabilizer)
                .scale(sign * cell.multiplicity as i64);
            out = &out + &term;
        }
        out
    }

    /// Alternating sum of tuple-census orbit counts over the cells.
    pub fn chi_kn(&self, p: u64, n: usize) -> Result<BigInt> {
        let mut total = BigInt::from(0);
        for cell in &self.cells {
            let count = census::chi_kn_finite(&cell.stabilizer, p, n)?;
            let signed = BigInt::from(count) * BigInt::from(cell.multiplicity);
            if cell.dim % 2 == 0 {
                total += signed;
            } else {
                total -= signed;
            }
        }
        Ok(total)
    }

    /// Alternating sum of `1/|stabilizer|`.
    pub fn chi_orb(&self) -> Rational {
        let mut total = Rational::from_integer(BigInt::from(0));
        for cell in &self.cells {
            let sign = if cell.dim % 2 == 0 { 1 } else { -1 };
            total += Rational::new(
                BigInt::from(sign * cell.multiplicity as i64),
                BigInt::from(cell.stabilizer.order()),
            );
        }
        total
    }

    /// Alternating count of equivariant cells.
    pub fn chi_q(&self) -> i64 {
        self.cells
            .iter()
            .map(|cell| {
                let sign = if cell.dim % 2 == 0 { 1 } else { -1 };
                sign * cell.multiplicity as i64
            })
            .sum()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let dto: StructureDto = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("bad cell structure JSON: {e}")))?;
        let cells = dto
            .cells
            .into_iter()
            .map(|c| {
                Ok(Cell {
                    dim: c.dim,
                    stabilizer: names::parse_group(&c.stabilizer)?,
                    multiplicity: c.multiplicity,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ProperCellStructure::new(dto.label, cells))
    }

    pub fn to_json(&self) -> String {
        let dto = StructureDto {
            label: self.label.clone(),
            cells: self
                .cells
                .iter()
                .map(|c| CellDto {
                    dim: c.dim,
                    stabilizer: names::spec_for(&c.stabilizer),
                    multiplicity: c.multiplicity,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&dto).expect("serializable")
    }
}

#[derive(Serialize, Deserialize)]
struct StructureDto {
    label: String,
    cells: Vec<CellDto>,
}

fn default_multiplicity() -> u32 {
    1
}

#[derive(Serialize, Deserialize)]
struct CellDto {
    dim: u32,
    stabilizer: String,
    #[serde(default = "default_multiplicity")]
    multiplicity: u32,
}

/// The Bass–Serre tree of an amalgamated product `H ∗_K L`: two vertex
/// orbits with stabilizers `H` and `L` and one edge orbit with stabilizer
/// `K`. The embedding data maps the generating sequence of `K` into each
/// factor and is validated as a pair of injective homomorphisms.
pub fn amalgam(
    h: &FiniteGroup,
    l: &FiniteGroup,
    k: &FiniteGroup,
    k_in_h: &[Permutation],
    k_in_l: &[Permutation],
) -> Result<ProperCellStructure> {
    if !iso::validate_embedding(k, h, k_in_h) {
        return Err(Error::InvalidEmbedding(format!(
            "images do not embed {} into {}",
            k.display_name(),
            h.display_name()
        )));
    }
    if !iso::validate_embedding(k, l, k_in_l) {
        return Err(Error::InvalidEmbedding(format!(
            "images do not embed {} into {}",
            k.display_name(),
            l.display_name()
        )));
    }
    let label = format!(
        "{} *_{} {}",
        h.display_name(),
        k.display_name(),
        l.display_name()
    );
    Ok(ProperCellStructure::new(
        label,
        vec![
            Cell {
                dim: 0,
                stabilizer: h.clone(),
                multiplicity: 1,
            },
            Cell {
                dim: 0,
                stabilizer: l.clone(),
                multiplicity: 1,
            },
            Cell {
                dim: 1,
                stabilizer: k.clone(),
                multiplicity: 1,
            },
        ],
    ))
}

/// As [`amalgam`], finding one embedding of `K` into each factor by search.
pub fn amalgam_auto(
    h: &FiniteGroup,
    l: &FiniteGroup,
    k: &FiniteGroup,
) -> Result<ProperCellStructure> {
    let k_in_h = iso::find_embedding(k, h).ok_or_else(|| {
        Error::InvalidEmbedding(format!(
            "{} does not embed into {}",
            k.display_name(),
            h.display_name()
        ))
    })?;
    let k_in_l = iso::find_embedding(k, l).ok_or_else(|| {
        Error::InvalidEmbedding(format!(
            "{} does not embed into {}",
            k.display_name(),
            l.display_name()
        ))
    })?;
    amalgam(h, l, k, &k_in_h, &k_in_l)
}

/// The tree of `SL₂(ℤ) ≅ C6 ∗_{C2} C4`.
pub fn sl2z_tree() -> ProperCellStructure {
    let c6 = names::cyclic(6).expect("C6");
    let c4 = names::cyclic(4).expect("C4");
    let c2 = names::cyclic(2).expect("C2");
    let mut tree = amalgam_auto(&c6, &c4, &c2).expect("C2 embeds in C4 and C6");
    tree.label = "SL2(Z) tree".into();
    tree
}

/// Soulé's equivariant cell structure for `SL₃(ℤ)`: five vertex orbits,
/// eight edge orbits, five 2-cell orbits and one free 3-cell.
pub fn soule_sl3() -> ProperCellStructure {
    let spec = |s: &str| names::parse_group(s).expect("built-in spec");
    let cell = |dim: u32, stabilizer: &str, multiplicity: u32| Cell {
        dim,
        stabilizer: spec(stabilizer),
        multiplicity,
    };
    ProperCellStructure::new(
        "SL3(Z) Soule complex",
        vec![
            cell(0, "S4", 3),
            cell(0, "D8", 1),
            cell(0, "D12", 1),
            cell(1, "C2", 2),
            cell(1, "D8", 2),
            cell(1, "S3", 2),
            cell(1, "C2xC2", 2),
            cell(2, "C2", 3),
            cell(2, "C2xC2", 1),
            cell(2, "C1", 1),
            cell(3, "C1", 1),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names::parse_group;
    use crate::rational::ratio;

    #[test]
    fn single_cell_is_a_basis_class() {
        let ring = BurnsideRing::new();
        let h = parse_group("D8").unwrap();
        let one_cell = ProperCellStructure::new(
            "point",
            vec![Cell {
                dim: 0,
                stabilizer: h.clone(),
                multiplicity: 1,
            }],
        );
        assert_eq!(one_cell.to_burnside_class(&ring), ring.class_of(&h));
    }

    #[test]
    fn dihedral_amalgam() {
        let ring = BurnsideRing::new();
        let d8 = parse_group("D8").unwrap();
        let c4 = parse_group("C4").unwrap();
        let tree = amalgam_auto(&d8, &d8, &c4).unwrap();

        let class = tree.to_burnside_class(&ring);
        let expected = &(&ring.class_of(&d8) + &ring.class_of(&d8)) - &ring.class_of(&c4);
        assert_eq!(class, expected);

        assert_eq!(tree.chi_kn(2, 1).unwrap(), BigInt::from(6));
        assert_eq!(tree.chi_orb(), ratio(0, 1));
        assert_eq!(tree.chi_q(), 1);
    }

    #[test]
    fn modular_group_tree() {
        let tree = sl2z_tree();
        assert_eq!(tree.chi_orb(), ratio(-1, 12));
        assert_eq!(tree.chi_q(), 1);
        for n in 1..=3u32 {
            assert_eq!(
                tree.chi_kn(2, n as usize).unwrap(),
                BigInt::from(4u64.pow(n))
            );
            assert_eq!(
                tree.chi_kn(3, n as usize).unwrap(),
                BigInt::from(3u64.pow(n))
            );
        }
    }

    #[test]
    fn invalid_embeddings_are_rejected() {
        let d8 = parse_group("D8").unwrap();
        let c4 = parse_group("C4").unwrap();
        let s3 = parse_group("S3").unwrap();
        // S3 does not embed into D8.
        assert!(matches!(
            amalgam_auto(&d8, &d8, &s3),
            Err(Error::InvalidEmbedding(_))
        ));
        // An order-2 image cannot embed C4.
        let wrong = [d8
            .elements()
            .iter()
            .find(|p| p.order() == 2)
            .unwrap()
            .clone()];
        assert!(matches!(
            amalgam(&d8, &d8, &c4, &wrong, &wrong),
            Err(Error::InvalidEmbedding(_))
        ));
    }

    #[test]
    fn soule_complex_euler_characteristics() {
        let ring = BurnsideRing::new();
        let soule = soule_sl3();
        // 5 − 8 + 5 − 1 = 1 equivariant cells, matching a contractible
        // quotient.
        assert_eq!(soule.chi_q(), 1);
        assert_eq!(ring.chi_q(&soule.to_burnside_class(&ring)), 1);
        for n in 1..=3u32 {
            assert_eq!(
                soule.chi_kn(3, n as usize).unwrap(),
                BigInt::from(3u64.pow(n))
            );
            assert_eq!(
                soule.chi_kn(2, n as usize).unwrap(),
                BigInt::from(2u64.pow(2 * n + 1) - 2u64.pow(n + 1) + 1)
            );
        }
        // No 5-torsion in any stabilizer.
        for n in 1..=3 {
            assert_eq!(soule.chi_kn(5, n).unwrap(), BigInt::from(1));
        }
    }

    #[test]
    fn factorization_through_the_burnside_class() {
        let ring = BurnsideRing::new();
        for structure in [soule_sl3(), sl2z_tree()] {
            let class = structure.to_burnside_class(&ring);
            for p in [2u64, 3] {
                for n in 0..=2usize {
                    assert_eq!(
                        structure.chi_kn(p, n).unwrap(),
                        ring.chi_kn(&class, p, n).unwrap(),
                        "{} p={p} n={n}",
                        structure.label
                    );
                }
            }
        }
    }

    #[test]
    fn cell_order_independence() {
        let ring = BurnsideRing::new();
        let mut shuffled = soule_sl3();
        shuffled.cells.reverse();
        let original = soule_sl3();
        assert_eq!(
            shuffled.to_burnside_class(&ring),
            original.to_burnside_class(&ring)
        );
        assert_eq!(
            shuffled.chi_kn(2, 1).unwrap(),
            original.chi_kn(2, 1).unwrap()
        );
        assert_eq!(shuffled.chi_orb(), original.chi_orb());
    }

    #[test]
    fn json_round_trip() {
        let original = soule_sl3();
        let text = original.to_json();
        let parsed = ProperCellStructure::from_json(&text).unwrap();
        assert_eq!(parsed.label, original.label);
        assert_eq!(parsed.chi_q(), original.chi_q());
        assert_eq!(parsed.chi_kn(2, 2).unwrap(), original.chi_kn(2, 2).unwrap());

        assert!(ProperCellStructure::from_json("{\"label\": 3}").is_err());
        let bad_spec = r#"{"label":"x","cells":[{"dim":0,"stabilizer":"Z9"}]}"#;
        assert!(ProperCellStructure::from_json(bad_spec).is_err());
    }
}
