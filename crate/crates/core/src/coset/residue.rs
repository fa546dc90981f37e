use std::fmt;

use num_integer::Integer;
use serde::Serialize;

/// Square matrix over `Z/p^depth`, entries stored reduced in row-major order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ResidueMatrix {
    n: usize,
    p: u64,
    depth: u32,
    modulus: u64,
    entries: Vec<u64>,
}

impl ResidueMatrix {
    pub fn new(n: usize, p: u64, depth: u32, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), n * n, "expected {} entries", n * n);
        let modulus = p.pow(depth);
        let entries = entries
            .iter()
            .map(|&x| x.rem_euclid(modulus as i64) as u64)
            .collect();
        Self { n, p, depth, modulus, entries }
    }

    pub fn identity(n: usize, p: u64, depth: u32) -> Self {
        let mut m = Self::zeros(n, p, depth);
        for k in 0..n {
            m.entries[k * n + k] = 1;
        }
        m
    }

    pub fn zeros(n: usize, p: u64, depth: u32) -> Self {
        Self { n, p, depth, modulus: p.pow(depth), entries: vec![0; n * n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.entries[r * self.n + c] = value.rem_euclid(self.modulus as i64) as u64;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.entries.chunks(self.n)
    }

    /// Same integer entries read modulo `p^depth`.
    pub fn lift(&self, depth: u32) -> Self {
        let e: Vec<i64> = self.entries.iter().map(|&x| x as i64).collect();
        Self::new(self.n, self.p, depth, &e)
    }

    /// Entry `(r, c)` of `self * other` without forming the product.
    pub fn product_entry(&self, other: &ResidueMatrix, r: usize, c: usize) -> u64 {
        let n = self.n;
        (0..n).fold(0u64, |acc, k| {
            (acc + self.entries[r * n + k] * other.entries[k * n + c]) % self.modulus
        })
    }

    pub fn mul(&self, other: &ResidueMatrix) -> ResidueMatrix {
        debug_assert_eq!((self.n, self.modulus), (other.n, other.modulus));
        let n = self.n;
        let mut out = Self::zeros(n, self.p, self.depth);
        for r in 0..n {
            for c in 0..n {
                out.entries[r * n + c] = self.product_entry(other, r, c);
            }
        }
        out
    }

    /// Determinant modulo `p^depth` by cofactor expansion.
    pub fn det(&self) -> u64 {
        let m = self.modulus as i128;
        fn go(e: &[u64], n: usize, rows: &[usize], cols: &mut Vec<usize>, m: i128) -> i128 {
            let r = rows[0];
            if rows.len() == 1 {
                return e[r * n + cols[0]] as i128;
            }
            let mut acc = 0i128;
            for k in 0..cols.len() {
                let c = cols.remove(k);
                let minor = go(e, n, &rows[1..], cols, m);
                cols.insert(k, c);
                let term = e[r * n + c] as i128 * minor % m;
                acc = if k % 2 == 0 { acc + term } else { acc - term };
            }
            acc.rem_euclid(m)
        }
        let e = &self.entries;
        match self.n {
            0 => return 1 % self.modulus,
            1 => return e[0],
            2 => return ((e[0] * e[3] % self.modulus) as i128 - (e[1] * e[2] % self.modulus) as i128).rem_euclid(m) as u64,
            3 => {
                let t = |a: usize, b: usize, c: usize| e[a] as i128 * e[b] as i128 % m * e[c] as i128;
                let pos = t(0, 4, 8) + t(1, 5, 6) + t(2, 3, 7);
                let neg = t(2, 4, 6) + t(0, 5, 7) + t(1, 3, 8);
                return (pos - neg).rem_euclid(m) as u64;
            }
            _ => {}
        }
        let rows: Vec<usize> = (0..self.n).collect();
        let mut cols = rows.clone();
        go(&self.entries, self.n, &rows, &mut cols, m) as u64
    }

    /// Invertible over `Z/p^depth` iff the determinant is a unit, i.e. prime to `p`.
    pub fn is_invertible(&self) -> bool {
        self.det() % self.p != 0
    }

    /// Gauss–Jordan inverse with unit pivots.
    pub fn inverse(&self) -> Option<ResidueMatrix> {
        let n = self.n;
        let m = self.modulus as i64;
        let mut a: Vec<i64> = self.entries.iter().map(|&x| x as i64).collect();
        let mut inv: Vec<i64> = Self::identity(n, self.p, self.depth).entries.iter().map(|&x| x as i64).collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r * n + col] % self.p as i64 != 0)?;
            if pivot != col {
                for k in 0..n {
                    a.swap(pivot * n + k, col * n + k);
                    inv.swap(pivot * n + k, col * n + k);
                }
            }
            let u = mod_inverse(a[col * n + col], m)?;
            for k in 0..n {
                a[col * n + k] = a[col * n + k] * u % m;
                inv[col * n + k] = inv[col * n + k] * u % m;
            }
            for r in 0..n {
                if r == col || a[r * n + col] == 0 {
                    continue;
                }
                let factor = a[r * n + col];
                for k in 0..n {
                    a[r * n + k] = (a[r * n + k] - factor * a[col * n + k]).rem_euclid(m);
                    inv[r * n + k] = (inv[r * n + k] - factor * inv[col * n + k]).rem_euclid(m);
                }
            }
        }
        Some(Self::new(n, self.p, self.depth, &inv))
    }
}

fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let g = a.rem_euclid(m).extended_gcd(&m);
    (g.gcd == 1).then(|| g.x.rem_euclid(m))
}

impl fmt::Debug for ResidueMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} mod {}", self.modulus)
    }
}

impl fmt::Display for ResidueMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (r, row) in self.rows().enumerate() {
            if r > 0 {
                f.write_str("; ")?;
            }
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            f.write_str(&cells.join(" "))?;
        }
        f.write_str("]")
    }
}
