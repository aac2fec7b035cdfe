use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Which basis change a [`ConnectingCoefficients`] table encodes.
///
/// * `StirlingFirst`: signed `s(n,k)` with `[z]_n = Σ s(n,k) z^k`
/// * `StirlingSecond`: `S(n,k)` with `z^n = Σ S(n,k) [z]_k`
/// * `Lah`: signless `L(n,k)` with `(z)_n = Σ L(n,k) [z]_k`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConnectingKind {
    StirlingFirst,
    StirlingSecond,
    Lah,
}

/// Lower-triangular integer table, rows `0..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectingCoefficients {
    pub kind: ConnectingKind,
    table: Vec<Vec<BigInt>>,
}

impl ConnectingCoefficients {
    pub fn n_max(&self) -> usize {
        self.table.len() - 1
    }

    /// Entry `(n, k)`; zero for `k > n`. Panics if `n > n_max`.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.table[n].get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.table[n]
    }
}

pub fn connecting_table(kind: ConnectingKind, n_max: usize) -> ConnectingCoefficients {
    let mut table: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 0..n_max {
        let prev = &table[n];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_else(BigInt::zero);
        let below = |k: usize| if k == 0 { BigInt::zero() } else { at(k - 1) };
        let row: Vec<BigInt> = (0..=n + 1)
            .map(|k| {
                let (n_big, k_big) = (BigInt::from(n), BigInt::from(k));
                match kind {
                    // s(n+1,k) = s(n,k-1) - n s(n,k)
                    ConnectingKind::StirlingFirst => below(k) - n_big * at(k),
                    // S(n+1,k) = S(n,k-1) + k S(n,k)
                    ConnectingKind::StirlingSecond => below(k) + k_big * at(k),
                    // L(n+1,k) = L(n,k-1) + (n+k) L(n,k)
                    ConnectingKind::Lah => below(k) + (n_big + k_big) * at(k),
                }
            })
            .collect();
        table.push(row);
    }
    ConnectingCoefficients { kind, table }
}
