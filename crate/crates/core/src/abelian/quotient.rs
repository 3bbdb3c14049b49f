//! Canonical-coordinate machinery for quotients `Z^n / L` where `L` is the
//! column lattice of an integer matrix. This is where Smith normal form turns
//! presentations into invariant factors, and where elements acquire canonical
//! coordinates with representative lifting.

use crate::matrix::{smith_normal_form, Int, IntMat, Snf};

use super::FGAbelianGroup;

/// A quotient `Z^n / L` in diagonalized coordinates.
///
/// With `u * R * v = d` (Smith form of the relation matrix `R`, columns
/// generating `L`), the change of basis `y = u x` identifies the quotient
/// with `⊕ Z/d_i ⊕ Z^{n-rank}`. Unit factors `d_i = 1` are dropped. The
/// canonical generator for a kept coordinate `i` is column `i` of `u^{-1}`.
#[derive(Clone, Debug)]
pub struct Quotient {
    ambient: usize,
    snf: Snf,
    /// Kept diagonal coordinates: torsion (d >= 2) first, then free.
    kept: Vec<usize>,
    /// Modulus per kept coordinate; 0 marks a free coordinate.
    moduli: Vec<Int>,
    group: FGAbelianGroup,
}

impl Quotient {
    /// `relations` is `n x m`: columns generate the sublattice of `Z^n`.
    pub fn new(ambient: usize, relations: &IntMat) -> Self {
        assert_eq!(relations.nrows(), ambient, "relation columns live in Z^ambient");
        let snf = smith_normal_form(relations);
        let mut kept = Vec::new();
        let mut moduli = Vec::new();
        let mut torsion = Vec::new();
        for i in 0..snf.rank.min(ambient) {
            let d = snf.d[(i, i)];
            if d >= 2 {
                kept.push(i);
                moduli.push(d);
                torsion.push(d);
            }
        }
        let mut rank = 0;
        for i in snf.rank..ambient {
            kept.push(i);
            moduli.push(0);
            rank += 1;
        }
        let group = FGAbelianGroup::canonical(rank, torsion);
        Quotient { ambient, snf, kept, moduli, group }
    }

    /// The quotient as a canonical group (torsion generators first).
    pub fn group(&self) -> &FGAbelianGroup {
        &self.group
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    fn reduce(&self, coords: &mut [Int]) {
        for (c, &m) in coords.iter_mut().zip(&self.moduli) {
            if m != 0 {
                *c = c.rem_euclid(m);
            }
        }
    }

    /// Canonical coordinates of an ambient vector.
    pub fn project(&self, x: &[Int]) -> Vec<Int> {
        assert_eq!(x.len(), self.ambient);
        let y = self.snf.u.mul(&IntMat::column_vector(x));
        let mut coords: Vec<Int> = self.kept.iter().map(|&i| y[(i, 0)]).collect();
        self.reduce(&mut coords);
        coords
    }

    /// The projection `Z^ambient -> group` as a matrix on generators.
    pub fn projection_matrix(&self) -> IntMat {
        IntMat::from_fn(self.kept.len(), self.ambient, |i, j| self.snf.u[(self.kept[i], j)])
    }

    /// An ambient representative of canonical coordinates.
    pub fn lift(&self, coords: &[Int]) -> Vec<Int> {
        assert_eq!(coords.len(), self.kept.len());
        let mut x = vec![0 as Int; self.ambient];
        for (k, &c) in coords.iter().enumerate() {
            let col = self.kept[k];
            for r in 0..self.ambient {
                x[r] += c * self.snf.u_inv[(r, col)];
            }
        }
        x
    }

    /// The lift of every canonical generator, as matrix columns.
    pub fn lift_matrix(&self) -> IntMat {
        IntMat::from_fn(self.ambient, self.kept.len(), |r, k| self.snf.u_inv[(r, self.kept[k])])
    }

    pub fn is_zero_class(&self, x: &[Int]) -> bool {
        self.project(x).iter().all(|&c| c == 0)
    }

    pub fn same_class(&self, x: &[Int], y: &[Int]) -> bool {
        self.project(x) == self.project(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_mod_2x3_lattice() {
        // Z^2 / <(2,0),(0,3)> = Z/2 + Z/3 = Z/6
        let rel = IntMat::from_rows(vec![vec![2, 0], vec![0, 3]]);
        let q = Quotient::new(2, &rel);
        assert_eq!(q.group().rank(), 0);
        assert_eq!(q.group().torsion(), &[6]);
        // (1,1) generates
        let g = q.project(&[1, 1]);
        let mut seen = std::collections::HashSet::new();
        let mut acc = vec![0 as Int; 2];
        for _ in 0..6 {
            acc[0] += 1;
            acc[1] += 1;
            seen.insert(q.project(&acc));
        }
        assert_eq!(seen.len(), 6);
        assert!(!q.is_zero_class(&[1, 1]));
        let lifted = q.lift(&g);
        assert!(q.same_class(&lifted, &[1, 1]));
    }

    #[test]
    fn free_quotient() {
        let rel = IntMat::zeros(3, 0);
        let q = Quotient::new(3, &rel);
        assert_eq!(q.group().rank(), 3);
        assert!(q.group().torsion().is_empty());
        assert_eq!(q.project(&[1, 2, 3]).len(), 3);
    }

    #[test]
    fn unit_factors_dropped() {
        // Z^2 / <(1,0)> = Z
        let rel = IntMat::from_rows(vec![vec![1], vec![0]]);
        let q = Quotient::new(2, &rel);
        assert_eq!(q.group().rank(), 1);
        assert!(q.group().torsion().is_empty());
        assert!(q.is_zero_class(&[5, 0]));
        assert!(!q.is_zero_class(&[0, 1]));
    }
}
