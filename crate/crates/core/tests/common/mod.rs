#![allow(dead_code)]

use rand::Rng;
use tiled_core::{IntMatrix, MData, Permutation};

/// Weights in `[0, max]` whose cyclic order has every `p_i <= 0`.
pub fn admissible_weights<R: Rng>(rng: &mut R, n: usize, max: i64) -> Vec<i64> {
    loop {
        let w: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max)).collect();
        let total: i64 = w.iter().sum();
        if total > 0 && w.iter().all(|&x| total - x >= 1) {
            return w;
        }
    }
}

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, lo: i64, hi: i64) -> IntMatrix {
    IntMatrix::from_fn(n, |i, j| if i == j { 0 } else { rng.gen_range(lo..=hi) })
}

/// Ten indices split into a 4-orbit and a 6-orbit, `a = (0,1,0,1,...)`.
pub fn two_orbit_nu() -> Permutation {
    Permutation::new(vec![1, 2, 3, 0, 5, 6, 7, 8, 9, 4]).unwrap()
}

// Each entry is (symbol, offset); symbols b..p are indices 0..14 in order
// b c d e f g h i j k l m n p.
const B: usize = 0;
const C: usize = 1;
const D: usize = 2;
const E: usize = 3;
const F: usize = 4;
const G: usize = 5;
const H: usize = 6;
const I: usize = 7;
const J: usize = 8;
const K: usize = 9;
const L: usize = 10;
const M: usize = 11;
const N: usize = 12;
const P: usize = 13;

type Cell = (usize, i64);

fn ten_by_ten_template() -> [[Cell; 10]; 10] {
    let (fg, gf) = ([(F, 0), (G, 0)], [(G, 1), (F, 0)]);
    let (hi, ih) = ([(H, 0), (I, 0)], [(I, 1), (H, 0)]);
    let mut t = [[(0usize, 0i64); 10]; 10];
    let top = [
        [(B, 0), (C, 0), (D, 0), (E, 0)],
        [(E, 1), (B, 0), (C, 1), (D, 0)],
        [(D, 0), (E, 0), (B, 0), (C, 0)],
        [(C, 1), (D, 0), (E, 1), (B, 0)],
    ];
    let bottom = [
        [(J, 0), (K, 0), (L, 0), (M, 0), (N, 0), (P, 0)],
        [(P, 1), (J, 0), (K, 1), (L, 0), (M, 1), (N, 0)],
        [(N, 0), (P, 0), (J, 0), (K, 0), (L, 0), (M, 0)],
        [(M, 1), (N, 0), (P, 1), (J, 0), (K, 1), (L, 0)],
        [(L, 0), (M, 0), (N, 0), (P, 0), (J, 0), (K, 0)],
        [(K, 1), (L, 0), (M, 1), (N, 0), (P, 1), (J, 0)],
    ];
    for r in 0..4 {
        t[r][..4].copy_from_slice(&top[r]);
        let pair = if r % 2 == 0 { fg } else { gf };
        for c in 0..6 {
            t[r][4 + c] = pair[c % 2];
        }
    }
    for r in 0..6 {
        let pair = if r % 2 == 0 { hi } else { ih };
        for c in 0..4 {
            t[4 + r][c] = pair[c % 2];
        }
        t[4 + r][4..].copy_from_slice(&bottom[r]);
    }
    t
}

/// The worked 10x10 m-data with every symbol set to the given values.
pub fn ten_by_ten_mdata(symbols: &[i64; 14]) -> MData {
    let t = ten_by_ten_template();
    let m = IntMatrix::from_fn(10, |i, j| symbols[t[i][j].0] + t[i][j].1);
    let a = (0..10).map(|i| (i % 2) as i64).collect();
    MData::new(m, a, two_orbit_nu()).unwrap()
}

/// The folded matrix as displayed: `2x` or `2x+1` per cell.
pub fn ten_by_ten_folded(symbols: &[i64; 14]) -> IntMatrix {
    let (fg, gf) = ([(F, 0), (G, 1)], [(G, 1), (F, 0)]);
    let (hi, ih) = ([(H, 0), (I, 1)], [(I, 1), (H, 0)]);
    let top = [
        [(B, 0), (C, 1), (D, 0), (E, 1)],
        [(E, 1), (B, 0), (C, 1), (D, 0)],
        [(D, 0), (E, 1), (B, 0), (C, 1)],
        [(C, 1), (D, 0), (E, 1), (B, 0)],
    ];
    let bottom = [
        [(J, 0), (K, 1), (L, 0), (M, 1), (N, 0), (P, 1)],
        [(P, 1), (J, 0), (K, 1), (L, 0), (M, 1), (N, 0)],
        [(N, 0), (P, 1), (J, 0), (K, 1), (L, 0), (M, 1)],
        [(M, 1), (N, 0), (P, 1), (J, 0), (K, 1), (L, 0)],
        [(L, 0), (M, 1), (N, 0), (P, 1), (J, 0), (K, 1)],
        [(K, 1), (L, 0), (M, 1), (N, 0), (P, 1), (J, 0)],
    ];
    let cell = |i: usize, j: usize| -> Cell {
        match (i < 4, j < 4) {
            (true, true) => top[i][j],
            (true, false) => (if i.is_multiple_of(2) { fg } else { gf })[(j - 4) % 2],
            (false, true) => (if (i - 4).is_multiple_of(2) { hi } else { ih })[j % 2],
            (false, false) => bottom[i - 4][j - 4],
        }
    };
    IntMatrix::from_fn(10, |i, j| {
        let (s, o) = cell(i, j);
        2 * symbols[s] + o
    })
}

/// Blockwise minimum as displayed.
pub fn ten_by_ten_bar(x: &[i64; 14]) -> IntMatrix {
    let min = |cells: &[i64]| *cells.iter().min().unwrap();
    IntMatrix::from_rows(&[
        vec![
            min(&[2 * x[B], 2 * x[C] + 1, 2 * x[D], 2 * x[E] + 1]),
            min(&[2 * x[F], 2 * x[G] + 1]),
        ],
        vec![
            min(&[2 * x[H], 2 * x[I] + 1]),
            min(&[
                2 * x[J],
                2 * x[K] + 1,
                2 * x[L],
                2 * x[M] + 1,
                2 * x[N],
                2 * x[P] + 1,
            ]),
        ],
    ])
    .unwrap()
}
