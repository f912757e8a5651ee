//! Named group constructors and the group-spec grammar.
//!
//! The grammar, case-sensitive:
//!
//! * `Cn` — cyclic of order n ≥ 1
//! * `Dn` — dihedral of order n, n even ≥ 2
//! * `Sn` — symmetric on n letters
//! * `An` — alternating on n letters
//! * `Q8` — quaternion group of order 8
//! * products with `x`, left-associative: `C2xC2xS3`
//! * `perm:(a b c),(d e)` — explicit generators; `,` separates generators,
//!   each generator is a product of parenthesized cycles over
//!   whitespace-separated 0-based points.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::iso::{self, GroupFingerprint};
use crate::perm::Permutation;

/// Parses a group-spec string.
pub fn parse_group(spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Error::UnknownSpec(spec.into()));
    }
    if let Some(rest) = spec.strip_prefix("perm:") {
        return parse_perm_generators(spec, rest);
    }
    let mut parts = spec.split('x');
    let mut group = parse_atom(spec, parts.next().unwrap())?;
    for part in parts {
        let factor = parse_atom(spec, part)?;
        group = group.direct_product(&factor)?;
    }
    Ok(group)
}

fn parse_atom(full: &str, atom: &str) -> Result<FiniteGroup> {
    if atom == "Q8" {
        return Ok(quaternion8());
    }
    let mut chars = atom.chars();
    let kind = chars.next().ok_or_else(|| unknown(full, "empty factor"))?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(unknown(full, &format!("unrecognized factor `{atom}`")));
    }
    let n: u64 = digits
        .parse()
        .map_err(|_| unknown(full, &format!("index out of range in `{atom}`")))?;
    match kind {
        'C' if n >= 1 => cyclic(n),
        'D' if n >= 2 && n.is_multiple_of(2) => dihedral(n),
        'S' if n >= 1 => symmetric(n),
        'A' if n >= 1 => alternating(n),
        'C' | 'D' | 'S' | 'A' => Err(unknown(full, &format!("invalid index in `{atom}`"))),
        _ => Err(unknown(full, &format!("unrecognized factor `{atom}`"))),
    }
}

fn unknown(spec: &str, detail: &str) -> Error {
    Error::UnknownSpec(format!("{spec} ({detail})"))
}

fn parse_perm_generators(full: &str, body: &str) -> Result<FiniteGroup> {
    let mut generators_cycles: Vec<Vec<Vec<u16>>> = Vec::new();
    let mut max_point: u16 = 0;
    for gen_text in body.split(',') {
        let mut cycles: Vec<Vec<u16>> = Vec::new();
        let mut rest = gen_text.trim();
        if rest.is_empty() {
            return Err(unknown(full, "empty generator"));
        }
        while !rest.is_empty() {
            let Some(open) = rest.strip_prefix('(') else {
                return Err(unknown(full, "expected `(`"));
            };
            let Some(close) = open.find(')') else {
                return Err(unknown(full, "missing `)`"));
            };
            let mut cycle = Vec::new();
            for token in open[..close].split_whitespace() {
                let pt: u16 = token
                    .parse()
                    .map_err(|_| unknown(full, &format!("bad point `{token}`")))?;
                max_point = max_point.max(pt);
                cycle.push(pt);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        generators_cycles.push(cycles);
    }
    let degree = max_point as usize + 1;
    let generators = generators_cycles
        .into_iter()
        .map(|cycles| {
            Permutation::from_cycles(degree, &cycles).map_err(|e| unknown(full, &e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::closure(&generators)
}

/// Cyclic group of order n, acting on n points (one point when n = 1).
pub fn cyclic(n: u64) -> Result<FiniteGroup> {
    let name = format!("C{n}");
    if n == 1 {
        return Ok(FiniteGroup::trivial().with_name(name));
    }
    if n > u16::MAX as u64 {
        return Err(Error::ClosureExceedsBound {
            limit: crate::group::DEFAULT_MAX_ORDER,
        });
    }
    let cycle: Vec<u16> = (0..n as u16).collect();
    let g = Permutation::from_cycles(n as usize, &[cycle])?;
    Ok(FiniteGroup::closure(&[g])?.with_name(name))
}

/// Dihedral group of order n (n even): symmetries of an (n/2)-gon.
pub fn dihedral(n: u64) -> Result<FiniteGroup> {
    if !n.is_multiple_of(2) || n < 2 {
        return Err(Error::UnknownSpec(format!(
            "D{n} (dihedral order must be even and ≥ 2)"
        )));
    }
    let name = format!("D{n}");
    let m = n / 2;
    let group = match m {
        1 => FiniteGroup::closure(&[Permutation::from_cycles(2, &[vec![0, 1]])?])?,
        2 => {
            // The 2-gon action is not faithful; use two disjoint swaps.
            let a = Permutation::from_cycles(4, &[vec![0, 1]])?;
            let b = Permutation::from_cycles(4, &[vec![2, 3]])?;
            FiniteGroup::closure(&[a, b])?
        }
        _ => {
            let rotation: Vec<u16> = (0..m as u16).collect();
            let r = Permutation::from_cycles(m as usize, &[rotation])?;
            let reflection: Vec<u16> = (0..m as u16).map(|i| ((m as u16) - i) % m as u16).collect();
            let s = Permutation::new(reflection)?;
            FiniteGroup::closure(&[r, s])?
        }
    };
    Ok(group.with_name(name))
}

/// Symmetric group on n letters.
pub fn symmetric(n: u64) -> Result<FiniteGroup> {
    let name = format!("S{n}");
    if n == 1 {
        return Ok(FiniteGroup::trivial().with_name(name));
    }
    let transposition = Permutation::from_cycles(n as usize, &[vec![0, 1]])?;
    let cycle: Vec<u16> = (0..n as u16).collect();
    let rotation = Permutation::from_cycles(n as usize, &[cycle])?;
    Ok(FiniteGroup::closure(&[transposition, rotation])?.with_name(name))
}

/// Alternating group on n letters.
pub fn alternating(n: u64) -> Result<FiniteGroup> {
    let name = format!("A{n}");
    if n <= 2 {
        let degree = n.max(1) as usize;
        let g = FiniteGroup::closure(&[Permutation::identity(degree)])?;
        return Ok(g.with_name(name));
    }
    let three_cycle = Permutation::from_cycles(n as usize, &[vec![0, 1, 2]])?;
    if n == 3 {
        return Ok(FiniteGroup::closure(&[three_cycle])?.with_name(name));
    }
    let cycle: Vec<u16> = if n % 2 == 1 {
        (0..n as u16).collect()
    } else {
        (1..n as u16).collect()
    };
    let rotation = Permutation::from_cycles(n as usize, &[cycle])?;
    Ok(FiniteGroup::closure(&[three_cycle, rotation])?.with_name(name))
}

/// The quaternion group Q8 in its regular representation on
/// {1, −1, i, −i, j, −j, k, −k}.
pub fn quaternion8() -> FiniteGroup {
    let left_i = Permutation::new(vec![2, 3, 1, 0, 6, 7, 5, 4]).unwrap();
    let left_j = Permutation::new(vec![4, 5, 7, 6, 1, 0, 2, 3]).unwrap();
    FiniteGroup::closure(&[left_i, left_j])
        .expect("Q8 has order 8")
        .with_name("Q8")
}

/// Catalog specs used to put recognizable names on anonymous groups.
const CATALOG_SPECS: &[&str] = &[
    "C1",
    "C2",
    "C3",
    "C4",
    "C5",
    "C6",
    "C7",
    "C8",
    "C9",
    "C10",
    "C11",
    "C12",
    "C13",
    "C14",
    "C15",
    "C16",
    "C2xC2",
    "C2xC4",
    "C2xC6",
    "C2xC8",
    "C2xC10",
    "C2xC12",
    "C3xC3",
    "C4xC4",
    "C2xC2xC2",
    "C2xC2xC4",
    "C2xC2xC6",
    "C2xC2xC2xC2",
    "C3xC6",
    "C4xC2xC2xC2",
    "S3",
    "D8",
    "Q8",
    "D12",
    "A4",
    "D16",
    "D8xC2",
    "Q8xC2",
    "C4xS3",
    "C2xA4",
    "S4",
    "D24",
    "D8xC2xC2",
    "S3xC2xC2",
    "S3xS3",
    "C2xS4",
    "C3xA4",
    "C3xS4",
    "D12xC2xC2",
    "C2xC2xA4",
];

fn catalog() -> &'static Vec<(String, GroupFingerprint, FiniteGroup)> {
    static CATALOG: OnceLock<Vec<(String, GroupFingerprint, FiniteGroup)>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        CATALOG_SPECS
            .iter()
            .map(|spec| {
                let g = parse_group(spec).expect("catalog specs parse");
                (spec.to_string(), iso::fingerprint(&g), g)
            })
            .collect()
    })
}

/// A spec string that reparses to a group isomorphic to `g`: the group's
/// name when that is itself a valid spec, otherwise explicit generators.
pub fn spec_for(g: &FiniteGroup) -> String {
    if let Some(name) = g.name() {
        if let Ok(parsed) = parse_group(name) {
            if parsed.order() == g.order() {
                return name.to_string();
            }
        }
    }
    if g.order() == 1 {
        return "C1".to_string();
    }
    let gens: Vec<String> = g.generators().iter().map(|p| p.to_string()).collect();
    format!("perm:{}", gens.join(","))
}

/// Tries to recognize a group as one of the cataloged standard groups,
/// returning its spec name.
pub fn identify(g: &FiniteGroup, fp: &GroupFingerprint) -> Option<String> {
    for (name, cat_fp, cat_g) in catalog() {
        if cat_fp == fp && iso::exists_isomorphism(g, cat_g) {
            return Some(name.clone());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_groups_have_expected_orders() {
        for (spec, order, classes) in [
            ("C1", 1, 1),
            ("C6", 6, 6),
            ("D2", 2, 2),
            ("D4", 4, 4),
            ("D8", 8, 5),
            ("D12", 12, 6),
            ("S3", 6, 3),
            ("S4", 24, 5),
            ("A4", 12, 4),
            ("A5", 60, 5),
            ("Q8", 8, 5),
            ("C2xC2", 4, 4),
            ("C2xC2xC2", 8, 8),
        ] {
            let g = parse_group(spec).unwrap();
            assert_eq!(g.order(), order, "order of {spec}");
            assert_eq!(g.conjugacy_classes().count(), classes, "classes of {spec}");
        }
    }

    #[test]
    fn s3_three_classes_by_brute_force() {
        // Oracle: orbit count under conjugation by all elements.
        let s3 = parse_group("S3").unwrap();
        let mut seen = [false; 6];
        let mut classes = 0;
        for x in 0..6u32 {
            if seen[x as usize] {
                continue;
            }
            classes += 1;
            for g in 0..6u32 {
                seen[s3.conjugate_id(x, g) as usize] = true;
            }
        }
        assert_eq!(classes, 3);
    }

    #[test]
    fn dihedral_naming_is_by_order() {
        assert_eq!(parse_group("D8").unwrap().order(), 8);
        assert_eq!(parse_group("D12").unwrap().order(), 12);
        // D12 contains an element of order 3.
        let d12 = parse_group("D12").unwrap();
        assert!((0..12).any(|i| d12.element_order(i) == 3));
    }

    #[test]
    fn product_specs_are_left_associative_products() {
        let g = parse_group("C2xC2").unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        let h = parse_group("C2xC3xC4").unwrap();
        assert_eq!(h.order(), 24);
    }

    #[test]
    fn perm_specs() {
        let g = parse_group("perm:(0 1 2 3),(0 2)").unwrap();
        assert_eq!(g.order(), 8);
        let v = parse_group("perm:(0 1)(2 3),(0 2)(1 3)").unwrap();
        assert_eq!(v.order(), 4);
        assert!(v.is_abelian());
    }

    #[test]
    fn bad_specs_are_rejected() {
        for bad in [
            "", "B4", "C0", "D7", "D0", "c2", "C2x", "xC2", "perm:", "perm:0 1", "Q16",
        ] {
            assert!(
                matches!(parse_group(bad), Err(Error::UnknownSpec(_))),
                "{bad} should be rejected"
            );
        }
    }

    #[test]
    fn quaternion_group_shape() {
        let q8 = quaternion8();
        assert_eq!(q8.order(), 8);
        let order_counts: Vec<u64> = (0..8).map(|i| q8.element_order(i)).collect();
        assert_eq!(order_counts.iter().filter(|&&o| o == 4).count(), 6);
        assert_eq!(order_counts.iter().filter(|&&o| o == 2).count(), 1);
        assert_eq!(q8.conjugacy_classes().count(), 5);
    }

    #[test]
    fn identify_recognizes_catalog_groups() {
        let g = parse_group("perm:(0 1 2 3),(0 2)").unwrap();
        let fp = iso::fingerprint(&g);
        assert_eq!(identify(&g, &fp).as_deref(), Some("D8"));
    }
}
