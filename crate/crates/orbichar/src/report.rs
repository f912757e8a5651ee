//! Character decomposition reports: for each family of tuple orbits, the
//! centralizer and its contribution to the localized cohomology of the
//! classifying space, as rank bookkeeping (free rank-one summands in even
//! degree, torus factors `(L ⊕ L[1])^{⊗d}`, or the ambient group's own
//! rational cohomology).

use num_bigint::BigInt;

use crate::census;
use crate::closed::{self, MaximalSubgroupDatum};
use crate::coxeter::{chi_kn_coxeter, Graph};
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::iso;
use crate::names;
use crate::rational::Rational;

/// Graded contribution of one summand family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Contribution {
    /// A free rank-one module in even degree (finite, rationally acyclic
    /// centralizer).
    RankOneEven,
    /// `(L ⊕ L[1])^{⊗d}` from a centralizer with a d-dimensional torus part.
    TorusPower(u32),
    /// The rational cohomology of the ambient group itself (the identity
    /// orbit), not resolved by the counting data.
    GroupCohomology,
}

impl Contribution {
    pub fn describe(&self) -> String {
        match self {
            Contribution::RankOneEven => "L".into(),
            Contribution::TorusPower(0) => "L".into(),
            Contribution::TorusPower(d) => format!("(L + L[1])^x{d}"),
            Contribution::GroupCohomology => "H*(B-; L)".into(),
        }
    }
}

/// A family of identical summands.
#[derive(Debug, Clone)]
pub struct SummandGroup {
    pub count: BigInt,
    pub centralizer: String,
    pub contribution: Contribution,
}

/// Decomposition report of the localized cohomology of a classifying space.
#[derive(Debug, Clone)]
pub struct CharacterReport {
    pub target: String,
    pub prime: u64,
    pub height: usize,
    pub summands: Vec<SummandGroup>,
}

impl CharacterReport {
    /// Total number of orbit summands.
    pub fn summand_count(&self) -> BigInt {
        self.summands.iter().map(|s| s.count.clone()).sum()
    }

    /// (even rank, odd rank) of the part whose contribution is a known free
    /// module, and whether an unresolved group-cohomology summand remains.
    pub fn known_free_rank(&self) -> (BigInt, BigInt, bool) {
        let mut even = BigInt::from(0);
        let mut odd = BigInt::from(0);
        let mut unresolved = false;
        for summand in &self.summands {
            match summand.contribution {
                Contribution::RankOneEven | Contribution::TorusPower(0) => {
                    even += &summand.count;
                }
                Contribution::TorusPower(d) => {
                    let half = BigInt::from(2u8).pow(d - 1);
                    even += &summand.count * &half;
                    odd += &summand.count * &half;
                }
                Contribution::GroupCohomology => unresolved = true,
            }
        }
        (even, odd, unresolved)
    }
}

/// Report for a finite group: one rank-one even summand per orbit of
/// commuting tuples, grouped by the isomorphism type of the centralizer.
pub fn report_finite(g: &FiniteGroup, p: u64, n: usize) -> Result<CharacterReport> {
    let census = census::census_naive(g, p, n)?;
    // Group orbit summands by centralizer description, preserving first-seen
    // order.
    let mut groups: Vec<(String, BigInt)> = Vec::new();
    for orbit in &census.orbits {
        let name = describe_group(&orbit.centralizer);
        match groups.iter_mut().find(|(n, _)| *n == name) {
            Some((_, count)) => *count += 1,
            None => groups.push((name, BigInt::from(1))),
        }
    }
    Ok(CharacterReport {
        target: g.display_name(),
        prime: p,
        height: n,
        summands: groups
            .into_iter()
            .map(|(centralizer, count)| SummandGroup {
                count,
                centralizer,
                contribution: Contribution::RankOneEven,
            })
            .collect(),
    })
}

fn describe_group(g: &FiniteGroup) -> String {
    if let Some(name) = g.name() {
        return name.to_string();
    }
    let fp = iso::fingerprint(g);
    names::identify(g, &fp).unwrap_or_else(|| format!("<order {}>", g.order()))
}

/// Report for `SL₂(O_K)` at an odd prime: the ambient cohomology plus
/// `Σ (|H_(p)|ⁿ − 1)` rank-one summands from the maximal finite subgroups.
pub fn report_sl2_ok(
    field: &str,
    p: u64,
    n: usize,
    maximal: &[MaximalSubgroupDatum],
) -> Result<CharacterReport> {
    // Validation is shared with the closed form.
    closed::chi_sl2_ok(p, n, &Rational::from_integer(BigInt::from(0)), maximal)?;
    let mut summands = vec![SummandGroup {
        count: BigInt::from(1),
        centralizer: format!("SL2(O_{field})"),
        contribution: Contribution::GroupCohomology,
    }];
    for datum in maximal {
        let extra = (BigInt::from(datum.p_part_order).pow(n as u32) - 1) * datum.multiplicity;
        if extra > BigInt::from(0) {
            summands.push(SummandGroup {
                count: extra,
                centralizer: format!("C{} (maximal finite)", datum.order),
                contribution: Contribution::RankOneEven,
            });
        }
    }
    Ok(CharacterReport {
        target: format!("SL2(O_{field})"),
        prime: p,
        height: n,
        summands,
    })
}

/// Report for `GL_{p−1}(ℤ)`: the ambient cohomology plus
/// `(pⁿ−1)/(p−1)·|Cl(ℚ(ζ_p))|` torus summands of dimension `(p−3)/2`.
pub fn report_gl(p: u64, n: usize, class_number: u64) -> Result<CharacterReport> {
    let data =
        closed::chi_gl_pminus1(p, n, &Rational::from_integer(BigInt::from(0)), class_number)?;
    Ok(CharacterReport {
        target: format!("GL{}(Z)", p - 1),
        prime: p,
        height: n,
        summands: torus_family_summands(format!("GL{}(Z)", p - 1), p, data),
    })
}

/// Report for `SL_{p−1}(ℤ)`: as the general linear case with the summand
/// count doubled.
pub fn report_sl(p: u64, n: usize, class_number: u64) -> Result<CharacterReport> {
    let data =
        closed::chi_sl_pminus1(p, n, &Rational::from_integer(BigInt::from(0)), class_number)?;
    Ok(CharacterReport {
        target: format!("SL{}(Z)", p - 1),
        prime: p,
        height: n,
        summands: torus_family_summands(format!("SL{}(Z)", p - 1), p, data),
    })
}

fn torus_family_summands(
    ambient: String,
    p: u64,
    data: closed::TorusSummands,
) -> Vec<SummandGroup> {
    let mut summands = vec![SummandGroup {
        count: BigInt::from(1),
        centralizer: ambient,
        contribution: Contribution::GroupCohomology,
    }];
    if data.summand_count > BigInt::from(0) {
        summands.push(SummandGroup {
            count: data.summand_count,
            centralizer: format!("C{p} x C2 x Z^{}", data.torus_dim),
            contribution: Contribution::TorusPower(data.torus_dim),
        });
    }
    summands
}

/// Report for `Sp_{p−1}(ℤ)`: finite centralizers `C_p × C2`, giving
/// `2^{(p−1)/2}·h_p⁻·(pⁿ−1)/(p−1)` rank-one summands.
pub fn report_sp(p: u64, n: usize, h_minus: u64) -> Result<CharacterReport> {
    let zero = Rational::from_integer(BigInt::from(0));
    let extra = closed::chi_sp_pminus1(p, n, &zero, h_minus)?;
    let count = extra.to_integer();
    let mut summands = vec![SummandGroup {
        count: BigInt::from(1),
        centralizer: format!("Sp{}(Z)", p - 1),
        contribution: Contribution::GroupCohomology,
    }];
    if count > BigInt::from(0) {
        summands.push(SummandGroup {
            count,
            centralizer: format!("C{p} x C2"),
            contribution: Contribution::RankOneEven,
        });
    }
    Ok(CharacterReport {
        target: format!("Sp{}(Z)", p - 1),
        prime: p,
        height: n,
        summands,
    })
}

/// Report for the mapping class group of genus `(p−1)/2`: finite
/// centralizers give `(p+1)(pⁿ−1)/6` rank-one summands.
pub fn report_mapping_class(p: u64, n: usize) -> Result<CharacterReport> {
    let zero = Rational::from_integer(BigInt::from(0));
    let extra = closed::chi_mapping_class(p, n, &zero)?;
    let count = extra.to_integer();
    let genus = (p - 1) / 2;
    let mut summands = vec![SummandGroup {
        count: BigInt::from(1),
        centralizer: format!("Gamma_{genus}"),
        contribution: Contribution::GroupCohomology,
    }];
    if count > BigInt::from(0) {
        summands.push(SummandGroup {
            count,
            centralizer: format!("C{p} (finite centralizer)"),
            contribution: Contribution::RankOneEven,
        });
    }
    Ok(CharacterReport {
        target: format!("Gamma_{genus}"),
        prime: p,
        height: n,
        summands,
    })
}

/// Report for a right-angled Coxeter group: free of rank `Σ s(l)(2ⁿ−1)ˡ`,
/// all summands rank-one even (spherical centralizers are rationally
/// acyclic).
pub fn report_coxeter(graph: &Graph, n: usize) -> CharacterReport {
    let rank = chi_kn_coxeter(graph, n);
    CharacterReport {
        target: format!(
            "W(L), |S| = {}, |E| = {}",
            graph.vertex_count(),
            graph.edge_count()
        ),
        prime: 2,
        height: n,
        summands: vec![SummandGroup {
            count: rank,
            centralizer: "special subgroup (rationally acyclic)".into(),
            contribution: Contribution::RankOneEven,
        }],
    }
}

/// Report for a free crystallographic group `ℤ^m ⋊ ℤ/p`: self-normalizing
/// `C_p` centralizers give `r(pⁿ−1)` rank-one summands.
pub fn report_crystallographic(p: u64, n: usize, r: u64) -> Result<CharacterReport> {
    let extra = closed::chi_crystallographic(p, n as i64, r, true, false)?
        - closed::chi_crystallographic(p, 0, r, true, false)?;
    let count = extra.to_integer();
    let mut summands = vec![SummandGroup {
        count: BigInt::from(1),
        centralizer: format!("Z^m x| C{p}"),
        contribution: Contribution::GroupCohomology,
    }];
    if count > BigInt::from(0) {
        summands.push(SummandGroup {
            count,
            centralizer: format!("C{p} (self-normalizing)"),
            contribution: Contribution::RankOneEven,
        });
    }
    Ok(CharacterReport {
        target: format!("Z^m x| C{p} (free action)"),
        prime: p,
        height: n,
        summands,
    })
}
