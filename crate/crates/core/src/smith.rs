//! Diagonalization of integer matrices over `Z/m`.
//!
//! `Z/m` is a principal ideal ring, so any matrix can be brought to a diagonal
//! form `P A Q = D` with unimodular `P`, `Q`, where every diagonal entry divides
//! `m` and the entries form a divisibility chain. Row operations are applied to
//! optional right-hand sides instead of being accumulated in `P`.

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(g, s, t)` with `s·a + t·b = g = gcd(a, b)`.
fn xgcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (g, s, _) = xgcd(a as i128, m as i128);
    (g == 1).then(|| s.rem_euclid(m as i128) as u64)
}

/// The ideal of `Z/m` generated by `v`, as its positive generator dividing `m`.
pub(crate) fn ideal(v: u64, m: u64) -> u64 {
    gcd(v % m, m)
}

struct Ring {
    m: u64,
}

impl Ring {
    /// `a·x + b·y` for entries in `[0, m)` and small signed coefficients.
    fn comb(&self, a: i128, x: u64, b: i128, y: u64) -> u64 {
        let m = self.m as i128;
        let a = a.rem_euclid(m);
        let b = b.rem_euclid(m);
        ((a * x as i128 + b * y as i128) % m) as u64
    }
}

/// Result of [`diagonalize`]: `A Q = P^{-1} D` with the row transforms applied
/// to `rhs`.
#[derive(Clone, Debug)]
pub struct Diagonal {
    pub m: u64,
    /// One entry per column; each divides `m`, with `m` standing for zero.
    pub diag: Vec<u64>,
    /// Column transform, as columns-by-columns matrix.
    pub q: Vec<Vec<u64>>,
    pub q_inv: Vec<Vec<u64>>,
    /// Right-hand sides after the row operations (`P b`).
    pub rhs: Vec<Vec<u64>>,
    rows: usize,
}

/// Diagonalizes the `rows.len() × ncols` matrix `rows` over `Z/m`.
pub fn diagonalize(rows: &[Vec<u64>], ncols: usize, m: u64, rhs: Vec<Vec<u64>>) -> Diagonal {
    assert!(m >= 1);
    let ring = Ring { m };
    let nrows = rows.len();
    let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| x % m).collect()).collect();
    let mut rhs: Vec<Vec<u64>> = rhs.into_iter().map(|b| b.into_iter().map(|x| x % m).collect()).collect();
    let mut q: Vec<Vec<u64>> = (0..ncols).map(|i| (0..ncols).map(|j| u64::from(i == j) % m).collect()).collect();
    let mut q_inv = q.clone();

    let mut st = State { ring: &ring, a: &mut a, rhs: &mut rhs, q: &mut q, q_inv: &mut q_inv, ncols };
    let steps = nrows.min(ncols);
    for t in 0..steps {
        // pivot: entry generating the smallest ideal, first by position
        let mut best: Option<(u64, usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                let v = st.a[i][j];
                if v != 0 {
                    let g = gcd(v, m);
                    if best.is_none_or(|(bg, _, _)| g < bg) {
                        best = Some((g, i, j));
                    }
                }
            }
            if best.is_some_and(|(g, _, _)| g == 1) {
                break;
            }
        }
        let Some((_, pi, pj)) = best else { break };
        st.swap_rows(t, pi);
        st.swap_cols(t, pj);
        st.clear(t, nrows);
    }
    // divisibility chain
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..steps {
            for j in i + 1..steps {
                let di = ideal(st.a[i][i], m);
                let dj = ideal(st.a[j][j], m);
                if dj % di != 0 {
                    st.col_op(i, j, 1, 0, 1, 1); // col_i += col_j
                    st.clear(i, nrows);
                    st.clear(j, nrows);
                    changed = true;
                }
            }
        }
    }
    let diag = (0..ncols).map(|i| if i < nrows { ideal(a[i][i], m) } else { m }).collect();
    Diagonal { m, diag, q, q_inv, rhs, rows: nrows }
}

struct State<'a> {
    ring: &'a Ring,
    a: &'a mut Vec<Vec<u64>>,
    rhs: &'a mut Vec<Vec<u64>>,
    q: &'a mut Vec<Vec<u64>>,
    q_inv: &'a mut Vec<Vec<u64>>,
    ncols: usize,
}

impl State<'_> {
    fn swap_rows(&mut self, x: usize, y: usize) {
        if x != y {
            self.a.swap(x, y);
            for b in self.rhs.iter_mut() {
                b.swap(x, y);
            }
        }
    }

    fn swap_cols(&mut self, x: usize, y: usize) {
        if x != y {
            for row in self.a.iter_mut() {
                row.swap(x, y);
            }
            for row in self.q.iter_mut() {
                row.swap(x, y);
            }
            self.q_inv.swap(x, y);
        }
    }

    /// rows (x, y) <- [[s, u], [v, w]] · (x, y); the matrix must be unimodular.
    fn row_op(&mut self, x: usize, y: usize, s: i128, u: i128, v: i128, w: i128) {
        let r = self.ring;
        for j in 0..self.ncols {
            let (ax, ay) = (self.a[x][j], self.a[y][j]);
            if ax == 0 && ay == 0 {
                continue;
            }
            self.a[x][j] = r.comb(s, ax, u, ay);
            self.a[y][j] = r.comb(v, ax, w, ay);
        }
        for b in self.rhs.iter_mut() {
            let (bx, by) = (b[x], b[y]);
            b[x] = r.comb(s, bx, u, by);
            b[y] = r.comb(v, bx, w, by);
        }
    }

    /// cols (x, y) <- (x, y) · E with E = [[s, v], [u, w]]:
    /// new x = s·x + u·y, new y = v·x + w·y.
    fn col_op(&mut self, x: usize, y: usize, s: i128, v: i128, u: i128, w: i128) {
        let r = self.ring;
        for row in self.a.iter_mut().chain(self.q.iter_mut()) {
            let (cx, cy) = (row[x], row[y]);
            if cx == 0 && cy == 0 {
                continue;
            }
            row[x] = r.comb(s, cx, u, cy);
            row[y] = r.comb(v, cx, w, cy);
        }
        // E^{-1} = [[w, -v], [-u, s]] acting on rows of q_inv
        let n = self.ncols;
        for j in 0..n {
            let (rx, ry) = (self.q_inv[x][j], self.q_inv[y][j]);
            self.q_inv[x][j] = r.comb(w, rx, -v, ry);
            self.q_inv[y][j] = r.comb(-u, rx, s, ry);
        }
    }

    /// Clears row `t` and column `t` apart from the pivot, then scales the
    /// pivot to a divisor of `m`.
    fn clear(&mut self, t: usize, nrows: usize) {
        loop {
            for i in t + 1..nrows {
                let b = self.a[i][t];
                if b == 0 {
                    continue;
                }
                let g = self.a[t][t];
                let (s, u, v, w) = combine(g, b);
                self.row_op(t, i, s, u, v, w);
            }
            let mut dirty = false;
            for j in t + 1..self.ncols {
                let b = self.a[t][j];
                if b == 0 {
                    continue;
                }
                let g = self.a[t][t];
                let (s, u, v, w) = combine(g, b);
                // new col_t = s col_t + u col_j, new col_j = v col_t + w col_j
                self.col_op(t, j, s, v, u, w);
                dirty = true;
            }
            if !dirty || (t + 1..nrows).all(|i| self.a[i][t] == 0) {
                break;
            }
        }
        self.normalize(t);
    }

    fn normalize(&mut self, t: usize) {
        let m = self.ring.m;
        let v = self.a[t][t];
        if v == 0 {
            return;
        }
        let g = gcd(v, m);
        let base = v / g;
        let step = m / g;
        let unit = (0..)
            .map(|k| (base + k * step) % m)
            .find(|&u| gcd(u, m) == 1)
            .expect("a unit lift always exists");
        let inv = inv_mod(unit, m).expect("unit") as i128;
        let r = self.ring;
        for j in 0..self.ncols {
            self.a[t][j] = r.comb(inv, self.a[t][j], 0, 0);
        }
        for b in self.rhs.iter_mut() {
            b[t] = r.comb(inv, b[t], 0, 0);
        }
    }
}

/// 2×2 unimodular `[[s, u], [v, w]]` sending `(g, b)` to `(gcd, 0)`.
fn combine(g: u64, b: u64) -> (i128, i128, i128, i128) {
    let (g, b) = (g as i128, b as i128);
    if g != 0 && b % g == 0 {
        return (1, 0, -(b / g), 1);
    }
    let (h, s, u) = xgcd(g, b);
    (s, u, -(b / h), g / h)
}

impl Diagonal {
    /// Some `x` with `A x = b`, where `b` was the right-hand side at `index`.
    pub fn solve(&self, index: usize) -> Option<Vec<u64>> {
        let m = self.m;
        let b = &self.rhs[index];
        let n = self.diag.len();
        if b.iter().skip(n).any(|&x| x != 0) {
            return None;
        }
        let mut y = vec![0u64; n];
        for i in 0..n {
            let bi = if i < self.rows { b[i] } else { 0 };
            let d = self.diag[i];
            if d == m {
                if bi != 0 {
                    return None;
                }
                continue;
            }
            if bi % d != 0 {
                return None;
            }
            y[i] = bi / d;
        }
        Some(mat_vec(&self.q, &y, m))
    }

    /// Generators of the kernel with their additive orders (orders > 1 only).
    pub fn kernel(&self) -> Vec<(Vec<u64>, u64)> {
        let m = self.m;
        (0..self.diag.len())
            .filter(|&i| self.diag[i] > 1)
            .map(|i| {
                let order = self.diag[i];
                let scale = m / order;
                let gen: Vec<u64> = self.q.iter().map(|row| (row[i] as u128 * scale as u128 % m as u128) as u64).collect();
                (gen, order)
            })
            .collect()
    }
}

pub(crate) fn mat_vec(a: &[Vec<u64>], x: &[u64], m: u64) -> Vec<u64> {
    a.iter()
        .map(|row| (row.iter().zip(x).map(|(&r, &v)| r as u128 * v as u128).sum::<u128>() % m as u128) as u64)
        .collect()
}

/// Some solution of `A x ≡ b (mod m)`.
pub fn solve_mod(rows: &[Vec<u64>], ncols: usize, b: &[u64], m: u64) -> Option<Vec<u64>> {
    diagonalize(rows, ncols, m, vec![b.to_vec()]).solve(0)
}

/// Kernel generators of `A` over `Z/m`, each with its additive order.
pub fn kernel_mod(rows: &[Vec<u64>], ncols: usize, m: u64) -> Vec<(Vec<u64>, u64)> {
    diagonalize(rows, ncols, m, Vec::new()).kernel()
}

/// A finite abelian group `Z/d_1 × … × Z/d_r` (each `d_i > 1`, `d_i | d_{i+1}`)
/// presented as a quotient of `Z/o_1 × … × Z/o_n` by a list of relations.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub factors: Vec<u64>,
    /// For each factor, its generator in the original coordinates.
    pub generators: Vec<Vec<u64>>,
    m: u64,
    /// Columns of `Q` restricted to the surviving factors.
    coord_map: Vec<Vec<u64>>,
}

impl Quotient {
    /// `orders[i]` must divide `m`.
    pub fn new(orders: &[u64], relations: &[Vec<u64>], m: u64) -> Quotient {
        let n = orders.len();
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n + relations.len());
        for (i, &o) in orders.iter().enumerate() {
            let mut r = vec![0; n];
            r[i] = o % m;
            rows.push(r);
        }
        rows.extend(relations.iter().cloned());
        let d = diagonalize(&rows, n, m, Vec::new());
        let keep: Vec<usize> = (0..n).filter(|&i| d.diag[i] > 1).collect();
        let factors = keep.iter().map(|&i| d.diag[i]).collect();
        let generators = keep.iter().map(|&i| d.q_inv[i].clone()).collect();
        let coord_map = keep.iter().map(|&i| d.q.iter().map(|row| row[i]).collect()).collect();
        Quotient { factors, generators, m, coord_map }
    }

    /// Coordinates of an element (given in original coordinates) with respect
    /// to the factor generators.
    pub fn coordinates(&self, x: &[u64]) -> Vec<u64> {
        self.coord_map
            .iter()
            .zip(&self.factors)
            .map(|(col, &d)| {
                let s: u128 = col.iter().zip(x).map(|(&c, &v)| c as u128 * v as u128).sum();
                ((s % self.m as u128) as u64) % d
            })
            .collect()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }
}
