//! Builtin families: chains, boolean lattices, bounded antichains, the two
//! five-element non-distributive lattices, divisor-indexed module instances,
//! and small group tables.

use crate::groups::GroupTable;
use crate::lattice::{Lattice, LatticeError};
use crate::Caps;

/// Chain with `n` elements, `0 < c1 < ... < top`.
pub fn chain(n: usize, caps: &Caps) -> Result<Lattice, LatticeError> {
    let labels = (0..n).map(|i| format!("c{i}")).collect();
    let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Lattice::from_order_pairs(labels, &pairs, caps.lattice)
}

/// Boolean lattice `B_k`: subsets of a `k`-element set ordered by inclusion.
pub fn boolean(k: u32, caps: &Caps) -> Result<Lattice, LatticeError> {
    let n = 1usize.checked_shl(k).unwrap_or(usize::MAX);
    if n > caps.lattice {
        return Err(LatticeError::CapacityExceeded {
            got: n,
            cap: caps.lattice,
        });
    }
    let labels = (0..n).map(|mask| format!("s{mask:0k$b}", k = k as usize)).collect();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a & b == a && a != b {
                pairs.push((a, b));
            }
        }
    }
    Lattice::from_order_pairs(labels, &pairs, caps.lattice)
}

/// `k` pairwise incomparable elements with a bottom and a top adjoined.
pub fn antichain_bounded(k: usize, caps: &Caps) -> Result<Lattice, LatticeError> {
    let mut labels = vec!["0".to_string()];
    labels.extend((0..k).map(|i| format!("a{i}")));
    labels.push("1".to_string());
    let top = k + 1;
    let mut pairs = Vec::new();
    for i in 1..=k {
        pairs.push((0, i));
        pairs.push((i, top));
    }
    if k == 0 {
        pairs.push((0, top));
    }
    Lattice::from_order_pairs(labels, &pairs, caps.lattice)
}

/// The pentagon: `0 < a < c < 1`, `0 < b < 1`, with `a, b` and `b, c`
/// incomparable.
pub fn n5(caps: &Caps) -> Result<Lattice, LatticeError> {
    let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
    let pairs = [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)];
    Lattice::from_order_pairs(labels, &pairs, caps.lattice)
}

/// The diamond: three incomparable elements between bounds.
pub fn m3(caps: &Caps) -> Result<Lattice, LatticeError> {
    antichain_bounded(3, caps)
}

/// Multiplication table of the cyclic group `Z_n`.
pub fn cyclic_group(n: usize) -> GroupTable {
    let table = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    GroupTable::new(table).expect("cyclic table is a group")
}

/// Symmetric group on three letters, elements indexed as permutations in
/// one-line order: e, (12), (13), (23), (123), (132).
pub fn s3() -> GroupTable {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [2, 1, 0],
        [0, 2, 1],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
        [p[q[0]], p[q[1]], p[q[2]]]
    };
    let table = (0..6)
        .map(|a| {
            (0..6)
                .map(|b| {
                    let r = compose(&perms[a], &perms[b]);
                    perms.iter().position(|p| *p == r).expect("closed")
                })
                .collect()
        })
        .collect();
    GroupTable::new(table).expect("S3 table is a group")
}

/// Quaternion group `Q_8`, elements `1, -1, i, -i, j, -j, k, -k`.
pub fn q8() -> GroupTable {
    // Encode x as (sign, axis) with axis in {1, i, j, k}.
    const AXES: usize = 4;
    let mul_axis = |a: usize, b: usize| -> (bool, usize) {
        match (a, b) {
            (0, x) => (false, x),
            (x, 0) => (false, x),
            (x, y) if x == y => (true, 0), // i*i = j*j = k*k = -1
            (1, 2) => (false, 3),          // i*j = k
            (2, 1) => (true, 3),
            (2, 3) => (false, 1), // j*k = i
            (3, 2) => (true, 1),
            (3, 1) => (false, 2), // k*i = j
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    };
    let idx = |neg: bool, axis: usize| axis * 2 + usize::from(neg);
    let table = (0..2 * AXES)
        .map(|x| {
            (0..2 * AXES)
                .map(|y| {
                    let (xa, xn) = (x / 2, x % 2 == 1);
                    let (ya, yn) = (y / 2, y % 2 == 1);
                    let (neg, axis) = mul_axis(xa, ya);
                    idx(neg ^ xn ^ yn, axis)
                })
                .collect()
        })
        .collect();
    GroupTable::new(table).expect("Q8 table is a group")
}

/// Dihedral group of the square, elements `r^i s^j` indexed `i + 4j`.
pub fn d4() -> GroupTable {
    let idx = |r: usize, s: usize| (r % 4) + 4 * (s % 2);
    // (r^i s^j)(r^k s^l) = r^(i + k or i - k) s^(j+l), flip when j = 1.
    let table = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (i, j) = (x % 4, x / 4);
                    let (k, l) = (y % 4, y / 4);
                    let r = if j == 0 { (i + k) % 4 } else { (i + 4 - k) % 4 };
                    idx(r, (j + l) % 2)
                })
                .collect()
        })
        .collect();
    GroupTable::new(table).expect("D4 table is a group")
}

/// Looks a builtin group up by name.
pub fn builtin_group(name: &str) -> Option<GroupTable> {
    match name {
        "s3" => Some(s3()),
        "z4" => Some(cyclic_group(4)),
        "q8" => Some(q8()),
        "d4" => Some(d4()),
        _ => None,
    }
}
