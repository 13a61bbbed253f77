//! Group descriptions: cycle-notation generator lists and named presets.
//!
//! Generators are separated by commas; each generator is a product of cycles
//! over 1-based points, e.g. `(1 2 3),(1 2)(3 4)`. Presets: `C<n>`, `S<n>`,
//! `A<n>`, `D<2n>` (dihedral of order 2n) and `Q8`.

use alloc::string::String;
use alloc::vec::Vec;

use super::group::{PermGroup, DEFAULT_ORDER_BOUND};
use super::perm::Perm;
use crate::{Error, Result};

pub fn parse_group(spec: &str) -> Result<PermGroup> {
    parse_group_with_bound(spec, DEFAULT_ORDER_BOUND)
}

pub fn parse_group_with_bound(spec: &str, bound: usize) -> Result<PermGroup> {
    let spec = spec.trim();
    if let Some(g) = preset(spec, bound)? {
        return Ok(g);
    }
    let cycles = parse_generators(spec)?;
    let degree = cycles.iter().flatten().flatten().copied().max().unwrap_or(1).max(1);
    build(degree, &cycles, bound)
}

/// Like [`parse_group`] but on an explicit number of points.
pub fn parse_group_on(spec: &str, degree: usize) -> Result<PermGroup> {
    let cycles = parse_generators(spec.trim())?;
    if let Some(&max) = cycles.iter().flatten().flatten().max() {
        if max > degree {
            return Err(Error::Degree { expected: degree, found: max });
        }
    }
    build(degree, &cycles, DEFAULT_ORDER_BOUND)
}

type Generator = Vec<Vec<usize>>;

fn build(degree: usize, gens: &[Generator], bound: usize) -> Result<PermGroup> {
    let perms = gens
        .iter()
        .map(|cycles| perm_from_cycles(degree, cycles))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::with_bound(degree, perms, bound)
}

fn perm_from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
    let mut p = Perm::identity(degree);
    for cyc in cycles {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in cyc.iter().enumerate() {
            images[x - 1] = (cyc[(i + 1) % cyc.len()] - 1) as u32;
        }
        // cycles in one generator act left to right as written
        p = Perm::new(images)?.compose(&p);
    }
    Ok(p)
}

fn parse_generators(spec: &str) -> Result<Vec<Generator>> {
    if spec.is_empty() {
        return Ok(Vec::new());
    }
    spec.split(',').map(parse_generator).collect()
}

fn parse_generator(text: &str) -> Result<Generator> {
    let text = text.trim();
    let err = |why: &str| Error::Parse(alloc::format!("{why} in `{text}`"));
    if text.is_empty() {
        return Err(err("empty generator"));
    }
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| err("expected `(`"))?;
        let close = body.find(')').ok_or_else(|| err("unclosed cycle"))?;
        let mut cyc: Vec<usize> = Vec::new();
        for tok in body[..close].split_whitespace() {
            let x: usize = tok.parse().map_err(|_| err("bad point"))?;
            if x == 0 {
                return Err(err("points are 1-based"));
            }
            if cyc.contains(&x) {
                return Err(err("repeated point"));
            }
            cyc.push(x);
        }
        cycles.push(cyc);
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

fn preset(spec: &str, bound: usize) -> Result<Option<PermGroup>> {
    if spec == "Q8" {
        let gens = ["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"];
        let text: String = gens.join(",");
        return parse_generators(&text).and_then(|g| build(8, &g, bound)).map(Some);
    }
    let mut chars = spec.chars();
    let kind = match chars.next() {
        Some(c @ ('C' | 'S' | 'A' | 'D')) => c,
        _ => return Ok(None),
    };
    let digits = chars.as_str();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Ok(None);
    }
    let n: usize = digits.parse().map_err(|_| Error::Parse(spec.into()))?;
    if n == 0 {
        return Err(Error::Parse(alloc::format!("`{spec}`: size must be positive")));
    }
    let cycle = |pts: core::ops::RangeInclusive<usize>| -> Generator { alloc::vec![pts.collect()] };
    let (degree, gens): (usize, Vec<Generator>) = match kind {
        'C' if n == 1 => (1, Vec::new()),
        'C' => (n, alloc::vec![cycle(1..=n)]),
        'S' if n <= 1 => (1, Vec::new()),
        'S' if n == 2 => (2, alloc::vec![cycle(1..=2)]),
        'S' => (n, alloc::vec![cycle(1..=2), cycle(1..=n)]),
        'A' if n <= 2 => (n.max(1), Vec::new()),
        'A' if n == 3 => (3, alloc::vec![cycle(1..=3)]),
        'A' if n % 2 == 1 => (n, alloc::vec![cycle(1..=3), cycle(1..=n)]),
        'A' => (n, alloc::vec![cycle(1..=3), cycle(2..=n)]),
        'D' => {
            if n % 2 == 1 {
                return Err(Error::Parse(alloc::format!("`{spec}`: dihedral order must be even")));
            }
            match n / 2 {
                1 => (2, alloc::vec![cycle(1..=2)]),
                2 => (4, alloc::vec![alloc::vec![alloc::vec![1, 2], alloc::vec![3, 4]], alloc::vec![alloc::vec![1, 3], alloc::vec![2, 4]]]),
                k => {
                    let reflection: Generator =
                        (1..=k / 2).map(|i| alloc::vec![i, k + 1 - i]).collect();
                    (k, alloc::vec![cycle(1..=k), reflection])
                }
            }
        }
        _ => unreachable!(),
    };
    build(degree, &gens, bound).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_lists() {
        assert_eq!(parse_group("(1 2)").unwrap().order(), 2);
        let s3 = parse_group("(1 2 3),(1 2)").unwrap();
        assert_eq!((s3.degree(), s3.order()), (3, 6));
        let triv = parse_group("").unwrap();
        assert_eq!((triv.degree(), triv.order()), (1, 1));
        assert_eq!(parse_group("(1 2)(3 4),(1 3)(2 4)").unwrap().order(), 4);
    }

    #[test]
    fn presets() {
        let orders = [
            ("C1", 1), ("C2", 2), ("C6", 6), ("S1", 1), ("S3", 6), ("S4", 24), ("A4", 12),
            ("A5", 60), ("A3", 3), ("D4", 4), ("D6", 6), ("D8", 8), ("D10", 10), ("Q8", 8),
            ("S7", 5040),
        ];
        for (spec, n) in orders {
            assert_eq!(parse_group(spec).unwrap().order(), n, "{spec}");
        }
    }

    #[test]
    fn q8_has_unique_involution() {
        let q8 = parse_group("Q8").unwrap();
        let involutions = (0..q8.order()).filter(|&i| q8.element_order(i) == 2).count();
        assert_eq!(involutions, 1);
        assert!((0..q8.order()).any(|a| (0..q8.order()).any(|b| q8.mul(a, b) != q8.mul(b, a))));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_group("(1 2"), Err(Error::Parse(_))));
        assert!(matches!(parse_group("(1 1)"), Err(Error::Parse(_))));
        assert!(matches!(parse_group("(0 1)"), Err(Error::Parse(_))));
        assert!(matches!(parse_group("1 2"), Err(Error::Parse(_))));
        assert!(matches!(parse_group_on("(1 5)", 3), Err(Error::Degree { .. })));
        assert!(matches!(parse_group("S8"), Err(Error::OrderBound { bound: 10080 })));
        assert!(matches!(parse_group("D7"), Err(Error::Parse(_))));
    }
}
