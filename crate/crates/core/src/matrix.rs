//! Dense integer matrices with exact arithmetic: Smith normal form with
//! recorded unimodular transforms, integer kernels and image lattices, and
//! Z-linear solving. Everything downstream (group presentations, homology,
//! mapping complexes) reduces to these primitives.

use std::fmt;

/// The engine's integer type. Smith-normal-form transforms of small dense
/// matrices can pick up entries around 1e13, and verification products then
/// need headroom well past i64; 128 bits covers everything at desk scale
/// (overflow checks stay on in release as a backstop).
pub type Int = i128;

/// Row-major dense matrix over the integers.
///
/// Zero-row and zero-column matrices are legal and show up constantly
/// (maps to and from the zero group), so every operation must tolerate
/// empty shapes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMat({}x{})[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Int) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn column_vector(entries: &[Int]) -> Self {
        Self::from_fn(entries.len(), 1, |i, _| entries[i])
    }

    pub fn diagonal(entries: &[Int]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &d) in entries.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self[(i, j)] == Int::from(i == j)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| -self[(i, j)])
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + other[(i, j)])
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Int) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| c * self[(i, j)])
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul: {}x{} * {}x{}",
                   self.rows, self.cols, other.rows, other.cols);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        (0..self.cols).map(|j| self[(i, j)]).collect()
    }

    /// Columns `lo..hi` as a new matrix.
    pub fn columns(&self, lo: usize, hi: usize) -> Self {
        Self::from_fn(self.rows, hi - lo, |i, j| self[(i, lo + j)])
    }

    /// Stack side by side: `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self[(i, j)] } else { other[(i, j - self.cols)] }
        })
    }

    /// Stack on top of each other: `[self; other]`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack col mismatch");
        Self::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows { self[(i, j)] } else { other[(i - self.rows, j)] }
        })
    }

    /// Block diagonal `[self 0; 0 other]`.
    pub fn block_diag(&self, other: &Self) -> Self {
        Self::from_fn(self.rows + other.rows, self.cols + other.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self[(i, j)]
            } else if i >= self.rows && j >= self.cols {
                other[(i - self.rows, j - self.cols)]
            } else {
                0
            }
        })
    }

    pub fn rows_as_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, q: Int) {
        for j in 0..self.cols {
            let v = self[(src, j)];
            self[(dst, j)] += q * v;
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, q: Int) {
        for i in 0..self.rows {
            let v = self[(i, src)];
            self[(i, dst)] += q * v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)];
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            self[(i, j)] = -self[(i, j)];
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Smith normal form `u * m * v = d` with `d` diagonal, nonnegative, and each
/// diagonal entry dividing the next. `u`, `v` are unimodular; their inverses
/// are tracked so lattice bases can be read off without re-solving.
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: IntMat,
    pub u: IntMat,
    pub u_inv: IntMat,
    pub v: IntMat,
    pub v_inv: IntMat,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
}

impl Snf {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> Vec<Int> {
        (0..self.rank).map(|i| self.d[(i, i)]).collect()
    }
}

struct SnfCalc {
    m: IntMat,
    u: IntMat,
    u_inv: IntMat,
    v: IntMat,
    v_inv: IntMat,
}

impl SnfCalc {
    fn new(m: IntMat) -> Self {
        let (r, c) = (m.nrows(), m.ncols());
        SnfCalc {
            m,
            u: IntMat::identity(r),
            u_inv: IntMat::identity(r),
            v: IntMat::identity(c),
            v_inv: IntMat::identity(c),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.m.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.m.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    // row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: Int) {
        self.m.add_row(dst, src, q);
        self.u.add_row(dst, src, q);
        self.u_inv.add_col(src, dst, -q);
    }

    // col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: Int) {
        self.m.add_col(dst, src, q);
        self.v.add_col(dst, src, q);
        self.v_inv.add_row(src, dst, -q);
    }

    fn negate_row(&mut self, i: usize) {
        self.m.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    // Smallest-absolute-value nonzero entry of the submatrix at (t.., t..).
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, Int)> = None;
        for i in t..self.m.nrows() {
            for j in t..self.m.ncols() {
                let a = self.m[(i, j)].abs();
                if a != 0 && best.map_or(true, |(_, _, b)| a < b) {
                    best = Some((i, j, a));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Unimodular transform on columns `(ci, cj)`: the new column pair is the
    /// old pair times `w`. `w_inv` must be the inverse of `w`.
    fn apply_col_pair(&mut self, ci: usize, cj: usize, w: [[Int; 2]; 2], w_inv: [[Int; 2]; 2]) {
        debug_assert_eq!(w[0][0] * w[1][1] - w[0][1] * w[1][0], 1);
        for target in [&mut self.m, &mut self.v] {
            for r in 0..target.nrows() {
                let (x, y) = (target[(r, ci)], target[(r, cj)]);
                target[(r, ci)] = w[0][0] * x + w[1][0] * y;
                target[(r, cj)] = w[0][1] * x + w[1][1] * y;
            }
        }
        for c in 0..self.v_inv.ncols() {
            let (x, y) = (self.v_inv[(ci, c)], self.v_inv[(cj, c)]);
            self.v_inv[(ci, c)] = w_inv[0][0] * x + w_inv[0][1] * y;
            self.v_inv[(cj, c)] = w_inv[1][0] * x + w_inv[1][1] * y;
        }
    }

    /// Replace the diagonal pair `(a, b)` at `(i, i)`, `(j, j)` by
    /// `(gcd(a, b), ±lcm(a, b))` with bounded transforms.
    fn diag_pair_reduce(&mut self, i: usize, j: usize) {
        let (a, b) = (self.m[(i, i)], self.m[(j, j)]);
        debug_assert!(a != 0 && b != 0);
        let (g, s, t) = egcd(a, b);
        self.add_row(i, j, 1); // row_i gains b at column j
        let w = [[s, -(b / g)], [t, a / g]];
        let w_inv = [[a / g, b / g], [-t, s]];
        self.apply_col_pair(i, j, w, w_inv);
        debug_assert_eq!(self.m[(i, i)], g);
        debug_assert_eq!(self.m[(i, j)], 0);
        let q = self.m[(j, i)] / g;
        self.add_row(j, i, -q);
        debug_assert_eq!(self.m[(j, i)], 0);
    }

    fn process(&mut self) -> usize {
        let (rows, cols) = (self.m.nrows(), self.m.ncols());
        let n = rows.min(cols);
        let mut t = 0;
        // Phase 1: diagonalize. Smallest pivots shrink strictly on each
        // repick, so this terminates with tame coefficient growth.
        while t < n {
            let Some((pi, pj)) = self.pivot(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            let mut clean = true;
            for i in (t + 1)..rows {
                let q = self.m[(i, t)].div_euclid(self.m[(t, t)]);
                if q != 0 {
                    self.add_row(i, t, -q);
                }
                if self.m[(i, t)] != 0 {
                    clean = false;
                }
            }
            for j in (t + 1)..cols {
                let q = self.m[(t, j)].div_euclid(self.m[(t, t)]);
                if q != 0 {
                    self.add_col(j, t, -q);
                }
                if self.m[(t, j)] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            t += 1;
        }
        let rank = t;
        // Phase 2: repair the divisibility chain on the diagonal.
        for i in 0..rank {
            for j in (i + 1)..rank {
                let (a, b) = (self.m[(i, i)], self.m[(j, j)]);
                if b % a != 0 {
                    self.diag_pair_reduce(i, j);
                }
            }
        }
        // Phase 3: sign normalization.
        for i in 0..rank {
            if self.m[(i, i)] < 0 {
                self.negate_row(i);
            }
        }
        rank
    }
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g` and `g > 0`.
fn egcd(a: Int, b: Int) -> (Int, Int, Int) {
    if b == 0 {
        if a < 0 {
            return (-a, -1, 0);
        }
        return (a, 1, 0);
    }
    let (g, s, t) = egcd(b, a.rem_euclid(b));
    (g, t, s - a.div_euclid(b) * t)
}

/// Smith normal form of any rectangular integer matrix.
///
/// Pivoting picks the smallest-absolute-value entry first, which keeps
/// coefficient growth tame at this scale.
pub fn smith_normal_form(m: &IntMat) -> Snf {
    let mut calc = SnfCalc::new(m.clone());
    let rank = calc.process();
    debug_assert_eq!(calc.u.mul(m).mul(&calc.v), calc.m);
    debug_assert!(calc.u.mul(&calc.u_inv).is_identity());
    debug_assert!(calc.v.mul(&calc.v_inv).is_identity());
    Snf { d: calc.m, u: calc.u, u_inv: calc.u_inv, v: calc.v, v_inv: calc.v_inv, rank }
}

/// Column-style Hermite reduction: unimodular column operations bring the
/// matrix to echelon form, and the nonzero columns form a basis of the
/// column lattice with entries bounded by the pivot structure. Used to keep
/// lattice bases small; Smith-form transforms can carry huge entries.
pub fn column_hnf(m: &IntMat) -> IntMat {
    let mut a = m.clone();
    let (rows, cols) = (a.nrows(), a.ncols());
    let mut c = 0;
    for row in 0..rows {
        if c == cols {
            break;
        }
        // Gcd out this row across the unfixed columns.
        loop {
            let mut nz: Vec<usize> = (c..cols).filter(|&j| a[(row, j)] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by_key(|&j| a[(row, j)].abs());
            let (k, j) = (nz[0], nz[1]);
            let q = a[(row, j)].div_euclid(a[(row, k)]);
            a.add_col(j, k, -q);
        }
        let Some(p) = (c..cols).find(|&j| a[(row, j)] != 0) else { continue };
        a.swap_cols(c, p);
        if a[(row, c)] < 0 {
            a.negate_col(c);
        }
        // Reduce already-fixed columns at this row into [0, pivot).
        let pivot = a[(row, c)];
        for j in 0..c {
            let q = a[(row, j)].div_euclid(pivot);
            if q != 0 {
                a.add_col(j, c, -q);
            }
        }
        c += 1;
    }
    a.columns(0, c)
}

/// A basis for the integer kernel `{ x : m x = 0 }`, as matrix columns.
pub fn kernel_basis(m: &IntMat) -> IntMat {
    let snf = smith_normal_form(m);
    column_hnf(&snf.v.columns(snf.rank, m.ncols()))
}

/// A basis for the column lattice `m Z^c`, as matrix columns.
pub fn image_basis(m: &IntMat) -> IntMat {
    column_hnf(m)
}

/// One integer solution `x` of `m x = b`, if any.
pub fn solve(m: &IntMat, b: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(b.len(), m.nrows());
    let snf = smith_normal_form(m);
    let ub = snf.u.mul(&IntMat::column_vector(b));
    let mut c = vec![0 as Int; m.ncols()];
    for i in 0..m.nrows() {
        let y = ub[(i, 0)];
        if i < snf.rank {
            let d = snf.d[(i, i)];
            if y % d != 0 {
                return None;
            }
            if i < m.ncols() {
                c[i] = y / d;
            }
        } else if y != 0 {
            return None;
        }
    }
    let x = snf.v.mul(&IntMat::column_vector(&c));
    Some(x.column(0))
}

/// Columnwise solve: `m x = b` for every column of `b`.
pub fn solve_matrix(m: &IntMat, b: &IntMat) -> Option<IntMat> {
    assert_eq!(m.nrows(), b.nrows());
    let snf = smith_normal_form(m);
    let ub = snf.u.mul(b);
    let mut c = IntMat::zeros(m.ncols(), b.ncols());
    for k in 0..b.ncols() {
        for i in 0..m.nrows() {
            let y = ub[(i, k)];
            if i < snf.rank {
                let d = snf.d[(i, i)];
                if y % d != 0 {
                    return None;
                }
                if i < m.ncols() {
                    c[(i, k)] = y / d;
                }
            } else if y != 0 {
                return None;
            }
        }
    }
    Some(snf.v.mul(&c))
}

/// Does the column lattice of `lattice` contain `x`?
pub fn lattice_contains(lattice: &IntMat, x: &[Int]) -> bool {
    solve(lattice, x).is_some()
}

/// Mutual inclusion of two column lattices in the same ambient Z^n.
pub fn lattice_eq(a: &IntMat, b: &IntMat) -> bool {
    assert_eq!(a.nrows(), b.nrows());
    (0..b.ncols()).all(|j| lattice_contains(a, &b.column(j)))
        && (0..a.ncols()).all(|j| lattice_contains(b, &a.column(j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Independent oracle: diagonalize by naive repeated gcd row/column
    // reduction without any transform bookkeeping, then normalize the
    // diagonal by pairwise gcd/lcm until the divisibility chain holds.
    fn oracle_invariant_factors(m: &IntMat) -> Vec<Int> {
        let mut a = m.clone();
        let n = a.nrows().min(a.ncols());
        for t in 0..n {
            loop {
                let mut piv: Option<(usize, usize, Int)> = None;
                for i in t..a.nrows() {
                    for j in t..a.ncols() {
                        let v = a[(i, j)].abs();
                        if v != 0 && piv.map_or(true, |(_, _, w)| v < w) {
                            piv = Some((i, j, v));
                        }
                    }
                }
                let Some((pi, pj, _)) = piv else { break };
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                let p = a[(t, t)];
                let mut done = true;
                for i in (t + 1)..a.nrows() {
                    let q = a[(i, t)].div_euclid(p);
                    a.add_row(i, t, -q);
                    if a[(i, t)] != 0 {
                        done = false;
                    }
                }
                for j in (t + 1)..a.ncols() {
                    let q = a[(t, j)].div_euclid(p);
                    a.add_col(j, t, -q);
                    if a[(t, j)] != 0 {
                        done = false;
                    }
                }
                if done {
                    // Fold any non-divisible lower-right entry into this row.
                    let p = a[(t, t)];
                    let mut again = false;
                    'db: for i in (t + 1)..a.nrows() {
                        for j in (t + 1)..a.ncols() {
                            if a[(i, j)] % p != 0 {
                                a.add_row(t, i, 1);
                                again = true;
                                break 'db;
                            }
                        }
                    }
                    if !again {
                        break;
                    }
                }
            }
        }
        let mut diag: Vec<Int> =
            (0..n).map(|i| a[(i, i)].abs()).filter(|&x| x != 0).collect();
        diag.sort_unstable();
        // gcd/lcm sweep to canonicalize into a divisibility chain
        fn gcd(a: Int, b: Int) -> Int {
            if b == 0 { a.abs() } else { gcd(b, a % b) }
        }
        let k = diag.len();
        for i in 0..k {
            for j in (i + 1)..k {
                let g = gcd(diag[i], diag[j]);
                let l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
            }
        }
        diag
    }

    // Fraction-free determinant (Bareiss) for unimodularity checks.
    fn det(m: &IntMat) -> Int {
        let n = m.nrows();
        assert_eq!(n, m.ncols());
        if n == 0 {
            return 1;
        }
        let mut a: Vec<Vec<Int>> =
            (0..n).map(|i| (0..n).map(|j| m[(i, j)] as Int).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                let Some(s) = (k + 1..n).find(|&i| a[i][k] != 0) else { return 0 };
                a.swap(k, s);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        sign * a[n - 1][n - 1]
    }

    #[test]
    fn snf_frozen_examples() {
        // brute-force oracle agrees on [[2,4],[6,8]]: factors 2, 4
        let m = IntMat::from_rows(vec![vec![2, 4], vec![6, 8]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.invariant_factors(), vec![2, 4]);
        assert_eq!(oracle_invariant_factors(&m), vec![2, 4]);

        let id = IntMat::identity(3);
        let snf = smith_normal_form(&id);
        assert_eq!(snf.d, id);

        let z = IntMat::zeros(2, 3);
        let snf = smith_normal_form(&z);
        assert!(snf.d.is_zero());
        assert_eq!(snf.rank, 0);
    }

    #[test]
    fn snf_empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let m = IntMat::zeros(r, c);
            let snf = smith_normal_form(&m);
            assert_eq!(snf.rank, 0);
            assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);
        }
    }

    #[test]
    fn kernel_and_image() {
        // (1, 2): Z^2 -> Z has kernel of rank 1 and full image
        let m = IntMat::from_rows(vec![vec![1, 2]]);
        let k = kernel_basis(&m);
        assert_eq!(k.ncols(), 1);
        assert!(m.mul(&k).is_zero());
        let im = image_basis(&m);
        assert!(lattice_contains(&im, &[1]));

        // x2 on Z: image is 2Z
        let two = IntMat::from_rows(vec![vec![2]]);
        let im = image_basis(&two);
        assert!(lattice_contains(&im, &[4]));
        assert!(!lattice_contains(&im, &[1]));
    }

    #[test]
    fn solve_examples() {
        let m = IntMat::from_rows(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(solve(&m, &[4, 9]), Some(vec![2, 3]));
        assert_eq!(solve(&m, &[1, 0]), None);
        // Underdetermined
        let m = IntMat::from_rows(vec![vec![2, 3]]);
        let x = solve(&m, &[1]).unwrap();
        assert_eq!(2 * x[0] + 3 * x[1], 1);
    }

    fn small_matrix() -> impl Strategy<Value = IntMat> {
        (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-9 as Int..=9, r * c)
                .prop_map(move |data| IntMat { rows: r, cols: c, data })
        })
    }

    proptest! {
        #[test]
        fn snf_contract(m in small_matrix()) {
            let snf = smith_normal_form(&m);
            // u * m * v = d exactly
            prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d.clone());
            // unimodularity
            prop_assert_eq!(det(&snf.u).abs(), 1);
            prop_assert_eq!(det(&snf.v).abs(), 1);
            prop_assert!(snf.u.mul(&snf.u_inv).is_identity());
            prop_assert!(snf.v.mul(&snf.v_inv).is_identity());
            // diagonal, nonnegative, divisibility chain
            let f = snf.invariant_factors();
            for i in 0..f.len() {
                prop_assert!(f[i] > 0);
                if i + 1 < f.len() {
                    prop_assert_eq!(f[i + 1] % f[i], 0);
                }
            }
            for i in 0..snf.d.nrows() {
                for j in 0..snf.d.ncols() {
                    if i != j {
                        prop_assert_eq!(snf.d[(i, j)], 0);
                    }
                }
            }
            // agreement with the independent reduction oracle
            prop_assert_eq!(f, oracle_invariant_factors(&m));
        }

        #[test]
        fn kernel_is_kernel(m in small_matrix()) {
            let k = kernel_basis(&m);
            prop_assert!(m.mul(&k).is_zero());
            // every solution of m x = 0 generated: check rank count
            let snf = smith_normal_form(&m);
            prop_assert_eq!(k.ncols(), m.ncols() - snf.rank);
        }

        #[test]
        fn image_contains_columns(m in small_matrix()) {
            let im = image_basis(&m);
            for j in 0..m.ncols() {
                prop_assert!(lattice_contains(&im, &m.column(j)));
            }
        }
    }
}
