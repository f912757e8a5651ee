//! Closed-form Euler characteristics for arithmetic, crystallographic and
//! mapping class groups, parameterized by number-theoretic inputs.
//!
//! Zeta values, class numbers and rational Euler characteristics of the
//! ambient groups are inputs, never computed; the bundled constants file
//! records each value together with its literature source.

use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::rational::{parse_rational, pow_i64, Rational};

/// One conjugacy class of maximal finite (cyclic) subgroups: its order, the
/// largest p-power dividing the order, and how many classes share the data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalSubgroupDatum {
    pub order: u64,
    pub p_part_order: u64,
    pub multiplicity: u64,
}

impl MaximalSubgroupDatum {
    /// Builds the datum for a cyclic subgroup of the given order at `p`.
    pub fn cyclic(order: u64, p: u64, multiplicity: u64) -> Self {
        MaximalSubgroupDatum {
            order,
            p_part_order: p_part(order, p),
            multiplicity,
        }
    }
}

/// Largest power of `p` dividing `value`.
pub fn p_part(mut value: u64, p: u64) -> u64 {
    let mut part = 1;
    while value.is_multiple_of(p) {
        value /= p;
        part *= p;
    }
    part
}

fn check_prime(p: u64) -> Result<()> {
    if p < 2 {
        return Err(Error::NotPrime(p));
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return Err(Error::NotPrime(p));
        }
        d += 1;
    }
    Ok(())
}

fn validate_maximal(p: u64, maximal: &[MaximalSubgroupDatum]) -> Result<()> {
    for datum in maximal {
        if datum.order == 0 || datum.p_part_order != p_part(datum.order, p) {
            return Err(Error::InvalidInput(format!(
                "maximal subgroup datum (order {}, p-part {}) is inconsistent at p = {p}",
                datum.order, datum.p_part_order
            )));
        }
    }
    Ok(())
}

fn big(value: u64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `2ζ_K(−1) + Σ (|H_(p)|ⁿ − 2/|H|)` over conjugacy classes of maximal
/// finite subgroups: the height-n characteristic of `B SL₂(O_K)` for a
/// totally real field `K` at an odd prime.
pub fn chi_sl2_ok(
    p: u64,
    n: usize,
    zeta: &Rational,
    maximal: &[MaximalSubgroupDatum],
) -> Result<Rational> {
    check_prime(p)?;
    if p == 2 {
        return Err(Error::EvenPrime);
    }
    validate_maximal(p, maximal)?;
    let mut total = zeta * big(2);
    for datum in maximal {
        let term = pow_i64(datum.p_part_order, n as i64) - big(2) / big(datum.order);
        total += term * big(datum.multiplicity);
    }
    Ok(total)
}

/// The p = 2 variant: `2^{n+1}ζ_K(−1) + Σ (|H_(2)|ⁿ − 2^{n+1}/|H|)`.
pub fn chi_sl2_ok_p2(
    n: usize,
    zeta: &Rational,
    maximal: &[MaximalSubgroupDatum],
) -> Result<Rational> {
    validate_maximal(2, maximal)?;
    let two_pow = pow_i64(2, n as i64 + 1);
    let mut total = zeta * &two_pow;
    for datum in maximal {
        let term = pow_i64(datum.p_part_order, n as i64) - &two_pow / big(datum.order);
        total += term * big(datum.multiplicity);
    }
    Ok(total)
}

/// Crystallographic groups `ℤ^m ⋊ ℤ/p`: with `r` conjugacy classes of
/// nontrivial finite subgroups and a free action away from the origin the
/// value is `r·pⁿ − r/p`; with fixed points, or torsion-free (`r = 0`), it
/// vanishes. The height `n = −1` is the formal orbifold substitution.
pub fn chi_crystallographic(
    p: u64,
    n: i64,
    r: u64,
    free_action: bool,
    fixed_points: bool,
) -> Result<Rational> {
    check_prime(p)?;
    if n < -1 {
        return Err(Error::InvalidInput("height must be at least -1".into()));
    }
    if free_action && fixed_points {
        return Err(Error::InvalidInput(
            "an action cannot be both free and have fixed points".into(),
        ));
    }
    if !free_action || r == 0 {
        return Ok(Rational::from_integer(BigInt::from(0)));
    }
    Ok(big(r) * pow_i64(p, n) - big(r) / big(p))
}

/// Character decomposition data of a torus-summand family: the scalar
/// characteristic, the number of identical free summands, and the torus
/// dimension of each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusSummands {
    pub chi_kn: Rational,
    pub summand_count: BigInt,
    pub torus_dim: u32,
}

/// `(pⁿ−1)/(p−1)` as an exact integer.
fn geometric_sum(p: u64, n: usize) -> BigInt {
    let mut total = BigInt::from(0);
    let mut power = BigInt::from(1);
    for _ in 0..n {
        total += &power;
        power *= p;
    }
    total
}

/// `GL_{p−1}(ℤ)` at `p ≥ 5`: the characteristic equals its rational value,
/// and the character decomposition adds `(pⁿ−1)/(p−1)·|Cl(ℚ(ζ_p))|`
/// summands, each a torus factor of dimension `(p−3)/2`.
pub fn chi_gl_pminus1(
    p: u64,
    n: usize,
    chi_q: &Rational,
    class_number: u64,
) -> Result<TorusSummands> {
    check_prime(p)?;
    if p < 5 {
        return Err(Error::InvalidInput(format!(
            "formula requires p >= 5, got {p}"
        )));
    }
    Ok(TorusSummands {
        chi_kn: chi_q.clone(),
        summand_count: geometric_sum(p, n) * BigInt::from(class_number),
        torus_dim: ((p - 3) / 2) as u32,
    })
}

/// `SL_{p−1}(ℤ)` at `p ≥ 5`: as for the general linear group with the
/// summand count doubled (oriented ideal classes).
pub fn chi_sl_pminus1(
    p: u64,
    n: usize,
    chi_q: &Rational,
    class_number: u64,
) -> Result<TorusSummands> {
    let gl = chi_gl_pminus1(p, n, chi_q, class_number)?;
    Ok(TorusSummands {
        summand_count: gl.summand_count * 2,
        ..gl
    })
}

/// `Sp_{p−1}(ℤ)` at an odd prime:
/// `χ_Q + 2^{(p−1)/2}·h_p⁻·(pⁿ−1)/(p−1)`.
pub fn chi_sp_pminus1(p: u64, n: usize, chi_q: &Rational, h_minus: u64) -> Result<Rational> {
    check_prime(p)?;
    if p == 2 {
        return Err(Error::EvenPrime);
    }
    let classes = BigInt::from(2u8).pow(((p - 1) / 2) as u32) * BigInt::from(h_minus);
    Ok(chi_q + Rational::from_integer(classes * geometric_sum(p, n)))
}

/// Mapping class group of a closed oriented surface of genus `(p−1)/2` for
/// `p ≥ 5`: `χ_Q + (pⁿ−1)(p+1)/6`.
pub fn chi_mapping_class(p: u64, n: usize, chi_q: &Rational) -> Result<Rational> {
    check_prime(p)?;
    if p < 5 {
        return Err(Error::InvalidInput(format!(
            "formula requires p >= 5, got {p}"
        )));
    }
    let pn = pow_i64(p, n as i64);
    let one = Rational::from_integer(BigInt::from(1));
    Ok(chi_q + (pn - one) * big(p + 1) / big(6))
}

/// `GL₂(ℤ)` at `p = 3`: the centralizers are finite and the count is
/// `(3ⁿ+1)/2`. Recorded separately because the generic torus formula for
/// `GL_{p−1}` does not apply at `p = 3`.
pub fn chi_gl2_at_3(n: usize) -> Rational {
    (pow_i64(3, n as i64) + Rational::from_integer(BigInt::from(1)))
        / Rational::from_integer(BigInt::from(2))
}

// ---------------------------------------------------------------------------
// Bundled number-theoretic constants.

#[derive(Debug, Deserialize)]
struct ZetaDto {
    field: String,
    value: String,
    source: String,
}

#[derive(Debug, Deserialize)]
struct MaximalClassDto {
    order: u64,
    count: u64,
}

#[derive(Debug, Deserialize)]
struct MaximalDto {
    field: String,
    classes: Vec<MaximalClassDto>,
    source: String,
}

#[derive(Debug, Deserialize)]
struct ChiQDto {
    group: String,
    value: Option<String>,
    source: String,
}

#[derive(Debug, Deserialize)]
struct ClassNumberDto {
    p: u64,
    value: u64,
    source: String,
}

#[derive(Debug, Deserialize)]
struct ConstantsDto {
    zeta_values: Vec<ZetaDto>,
    sl2_maximal_subgroups: Vec<MaximalDto>,
    rational_euler_characteristics: Vec<ChiQDto>,
    cyclotomic_class_numbers: Vec<ClassNumberDto>,
    relative_class_numbers: Vec<ClassNumberDto>,
}

/// A constant together with where its value comes from.
#[derive(Debug, Clone)]
pub struct Sourced<T> {
    pub value: T,
    pub source: String,
}

/// Conjugacy classes of maximal finite subgroups as (order, count) pairs.
type MaximalClasses = Vec<(u64, u64)>;

/// Number-theoretic inputs for the closed forms, loaded from JSON.
#[derive(Debug)]
pub struct Constants {
    zeta: Vec<(String, Sourced<Rational>)>,
    sl2_maximal: Vec<(String, Sourced<MaximalClasses>)>,
    chi_q: Vec<(String, Sourced<Option<Rational>>)>,
    class_numbers: Vec<(u64, Sourced<u64>)>,
    h_minus: Vec<(u64, Sourced<u64>)>,
}

static BUNDLED: OnceLock<Constants> = OnceLock::new();

impl Constants {
    /// The constants shipped with the crate.
    pub fn bundled() -> &'static Constants {
        BUNDLED.get_or_init(|| {
            Constants::from_json(include_str!("../data/constants.json"))
                .expect("bundled constants parse")
        })
    }

    pub fn from_json(text: &str) -> Result<Constants> {
        let dto: ConstantsDto = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("bad constants JSON: {e}")))?;
        let zeta = dto
            .zeta_values
            .into_iter()
            .map(|z| {
                Ok((
                    z.field,
                    Sourced {
                        value: parse_rational(&z.value)?,
                        source: z.source,
                    },
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let sl2_maximal = dto
            .sl2_maximal_subgroups
            .into_iter()
            .map(|m| {
                (
                    m.field,
                    Sourced {
                        value: m.classes.iter().map(|c| (c.order, c.count)).collect(),
                        source: m.source,
                    },
                )
            })
            .collect();
        let chi_q = dto
            .rational_euler_characteristics
            .into_iter()
            .map(|c| {
                let value = c.value.as_deref().map(parse_rational).transpose()?;
                Ok((
                    c.group,
                    Sourced {
                        value,
                        source: c.source,
                    },
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let class_numbers = dto
            .cyclotomic_class_numbers
            .into_iter()
            .map(|c| {
                (
                    c.p,
                    Sourced {
                        value: c.value,
                        source: c.source,
                    },
                )
            })
            .collect();
        let h_minus = dto
            .relative_class_numbers
            .into_iter()
            .map(|c| {
                (
                    c.p,
                    Sourced {
                        value: c.value,
                        source: c.source,
                    },
                )
            })
            .collect();
        Ok(Constants {
            zeta,
            sl2_maximal,
            chi_q,
            class_numbers,
            h_minus,
        })
    }

    /// `ζ_K(−1)` for a named totally real field.
    pub fn zeta(&self, field: &str) -> Option<&Sourced<Rational>> {
        self.zeta.iter().find(|(f, _)| f == field).map(|(_, s)| s)
    }

    pub fn zeta_fields(&self) -> Vec<&str> {
        self.zeta.iter().map(|(f, _)| f.as_str()).collect()
    }

    /// Conjugacy classes of maximal finite subgroups of `SL₂(O_K)`, as
    /// (order, class count) pairs.
    pub fn sl2_maximal(&self, field: &str) -> Option<&Sourced<MaximalClasses>> {
        self.sl2_maximal
            .iter()
            .find(|(f, _)| f == field)
            .map(|(_, s)| s)
    }

    /// `χ_Q(BG)` for a named group. The outer `Option` distinguishes a
    /// missing entry; an inner `None` is an entry recorded as unavailable.
    pub fn chi_q(&self, group: &str) -> Option<&Sourced<Option<Rational>>> {
        self.chi_q.iter().find(|(g, _)| g == group).map(|(_, s)| s)
    }

    /// Class number of the p-th cyclotomic field.
    pub fn class_number(&self, p: u64) -> Option<&Sourced<u64>> {
        self.class_numbers
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, s)| s)
    }

    /// Relative class number `h_p⁻`.
    pub fn h_minus(&self, p: u64) -> Option<&Sourced<u64>> {
        self.h_minus.iter().find(|(q, _)| *q == p).map(|(_, s)| s)
    }

    /// χ_Q of `GL_{p−1}(ℤ)`, applying the vanishing rule for `p ≥ 13`.
    pub fn chi_q_gl(&self, p: u64) -> Option<Sourced<Rational>> {
        self.lookup_linear("GL", p)
    }

    /// χ_Q of `SL_{p−1}(ℤ)`, applying the vanishing rule for `p ≥ 13`.
    pub fn chi_q_sl(&self, p: u64) -> Option<Sourced<Rational>> {
        self.lookup_linear("SL", p)
    }

    fn lookup_linear(&self, family: &str, p: u64) -> Option<Sourced<Rational>> {
        let label = format!("{family}{}(Z)", p - 1);
        if let Some(entry) = self.chi_q(&label) {
            return entry.value.clone().map(|value| Sourced {
                value,
                source: entry.source.clone(),
            });
        }
        if p >= 13 {
            return Some(Sourced {
                value: Rational::from_integer(BigInt::from(0)),
                source: format!("chi_Q({family}_{{p-1}}(Z)) = 0 for p >= 13 (Horozov)"),
            });
        }
        None
    }

    /// The maximal-subgroup data for `SL₂(O_K)` as typed input for the
    /// closed forms at a given prime.
    pub fn sl2_maximal_data(&self, field: &str, p: u64) -> Option<Vec<MaximalSubgroupDatum>> {
        self.sl2_maximal(field).map(|classes| {
            classes
                .value
                .iter()
                .map(|&(order, count)| MaximalSubgroupDatum::cyclic(order, p, count))
                .collect()
        })
    }
}
