//! Exact arithmetic of finitely generated abelian groups and their
//! homomorphisms: presentations, invariant factors, kernels/cokernels/images
//! with witness maps, Hom groups with representative extraction, and
//! exactness tests. Towers and colimit systems live in [`tower`].

mod quotient;
pub mod tower;

pub use quotient::Quotient;

use crate::matrix::{
    Int,
    image_basis, kernel_basis, lattice_contains, lattice_eq, smith_normal_form, solve_matrix,
    IntMat,
};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbelianError {
    #[error("homomorphism matrix is {got_rows}x{got_cols}, expected {want_rows}x{want_cols}")]
    ShapeMismatch { got_rows: usize, got_cols: usize, want_rows: usize, want_cols: usize },
    #[error("matrix does not carry source relations into target relations")]
    IllDefined,
    #[error("maps are not composable: target of first differs from source of second")]
    NotComposable,
}

/// A finitely generated abelian group presented by relations on chosen
/// generators. The presentation matrix is relations x generators; the
/// canonical data (free rank, invariant factors >= 2 in a divisibility
/// chain) is derived from its Smith normal form at construction.
///
/// Equality is isomorphism-class equality, i.e. equality of (rank, torsion);
/// the retained presentation only matters for checking that maps are
/// well defined.
#[derive(Clone)]
pub struct FGAbelianGroup {
    rank: usize,
    torsion: Vec<Int>,
    presentation: IntMat,
}

impl PartialEq for FGAbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.torsion == other.torsion
    }
}
impl Eq for FGAbelianGroup {}

impl std::fmt::Debug for FGAbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.describe())
    }
}

impl FGAbelianGroup {
    /// Group presented by `relations` (one row per relation).
    pub fn from_presentation(presentation: IntMat) -> Self {
        let snf = smith_normal_form(&presentation.transpose());
        let gens = presentation.ncols();
        let torsion: Vec<Int> =
            snf.invariant_factors().into_iter().filter(|&d| d >= 2).collect();
        let rank = gens - snf.rank;
        FGAbelianGroup { rank, torsion, presentation }
    }

    /// The canonical form: torsion generators first, then free generators,
    /// with presentation `[diag(torsion) | 0]`.
    pub fn canonical(rank: usize, torsion: Vec<Int>) -> Self {
        for w in torsion.windows(2) {
            debug_assert!(w[1] % w[0] == 0, "torsion must form a divisibility chain");
        }
        debug_assert!(torsion.iter().all(|&d| d >= 2));
        let t = torsion.len();
        let mut presentation = IntMat::zeros(t, t + rank);
        for (i, &d) in torsion.iter().enumerate() {
            presentation[(i, i)] = d;
        }
        FGAbelianGroup { rank, torsion, presentation }
    }

    pub fn zero() -> Self {
        Self::canonical(0, vec![])
    }

    pub fn free(rank: usize) -> Self {
        Self::canonical(rank, vec![])
    }

    pub fn cyclic(n: Int) -> Self {
        assert!(n >= 0);
        match n {
            0 => Self::free(1),
            1 => Self::zero(),
            _ => Self::canonical(0, vec![n]),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[Int] {
        &self.torsion
    }

    pub fn presentation(&self) -> &IntMat {
        &self.presentation
    }

    /// Number of chosen generators (the dimension elements are written in).
    pub fn gens(&self) -> usize {
        self.presentation.ncols()
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Relations as columns in `Z^gens`.
    pub fn relation_cols(&self) -> IntMat {
        self.presentation.transpose()
    }

    pub fn quotient(&self) -> Quotient {
        Quotient::new(self.gens(), &self.relation_cols())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_presentation(self.presentation.block_diag(&other.presentation))
    }

    pub fn is_element_zero(&self, x: &[Int]) -> bool {
        assert_eq!(x.len(), self.gens());
        lattice_contains(&self.relation_cols(), x)
    }

    /// Display form like `Z^2 + Z/2 + Z/4`, `0` for the trivial group.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// A homomorphism between presented groups, given by an integer matrix on
/// the chosen generators (target rows x source columns). Well-definedness
/// (relations land in relations) is checked at construction, never assumed.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: FGAbelianGroup,
    target: FGAbelianGroup,
    matrix: IntMat,
}

impl GroupHom {
    pub fn new(
        source: FGAbelianGroup,
        target: FGAbelianGroup,
        matrix: IntMat,
    ) -> Result<Self, AbelianError> {
        if matrix.nrows() != target.gens() || matrix.ncols() != source.gens() {
            return Err(AbelianError::ShapeMismatch {
                got_rows: matrix.nrows(),
                got_cols: matrix.ncols(),
                want_rows: target.gens(),
                want_cols: source.gens(),
            });
        }
        let carried = matrix.mul(&source.relation_cols());
        if solve_matrix(&target.relation_cols(), &carried).is_none() {
            return Err(AbelianError::IllDefined);
        }
        Ok(GroupHom { source, target, matrix })
    }

    pub fn identity(g: &FGAbelianGroup) -> Self {
        GroupHom { source: g.clone(), target: g.clone(), matrix: IntMat::identity(g.gens()) }
    }

    pub fn zero(source: &FGAbelianGroup, target: &FGAbelianGroup) -> Self {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMat::zeros(target.gens(), source.gens()),
        }
    }

    /// Multiplication by `c` as an endomorphism.
    pub fn scalar(g: &FGAbelianGroup, c: Int) -> Self {
        GroupHom { source: g.clone(), target: g.clone(), matrix: IntMat::identity(g.gens()).scale(c) }
    }

    pub fn source(&self) -> &FGAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FGAbelianGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn apply(&self, x: &[Int]) -> Vec<Int> {
        self.matrix.mul(&IntMat::column_vector(x)).column(0)
    }

    /// `self` after `first` (so `source(first) -> target(self)`).
    pub fn compose(&self, first: &GroupHom) -> Result<GroupHom, AbelianError> {
        if first.target.gens() != self.source.gens() || first.target != self.source {
            return Err(AbelianError::NotComposable);
        }
        Ok(GroupHom {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix),
        })
    }

    /// Equality as homomorphisms: matrices agree up to target relations.
    pub fn eq_as_maps(&self, other: &GroupHom) -> bool {
        if self.source.gens() != other.source.gens() || self.target.gens() != other.target.gens()
        {
            return false;
        }
        let diff = self.matrix.sub(&other.matrix);
        solve_matrix(&self.target.relation_cols(), &diff).is_some()
    }

    pub fn is_zero_map(&self) -> bool {
        solve_matrix(&self.target.relation_cols(), &self.matrix).is_some()
    }

    /// The sublattice `{ x in Z^{source gens} : matrix x in target relations }`,
    /// as columns. Contains the source relations whenever the map is well
    /// defined, so it presents the kernel subgroup.
    fn kernel_preimage_lattice(&self) -> IntMat {
        let tr = self.target.relation_cols();
        let block = self.matrix.hstack(&tr.neg());
        let ker = kernel_basis(&block);
        IntMat::from_fn(self.source.gens(), ker.ncols(), |i, j| ker[(i, j)])
    }

    /// Kernel with its inclusion into the source.
    pub fn kernel(&self) -> (FGAbelianGroup, GroupHom) {
        let pre = self.kernel_preimage_lattice();
        let basis = image_basis(&pre);
        let rels = solve_matrix(&basis, &self.source.relation_cols())
            .expect("source relations lie in the kernel preimage");
        let group = FGAbelianGroup::from_presentation(rels.transpose());
        let incl = GroupHom { source: group.clone(), target: self.source.clone(), matrix: basis };
        (group, incl)
    }

    /// Image with its inclusion into the target.
    pub fn image(&self) -> (FGAbelianGroup, GroupHom) {
        let gens = self.matrix.hstack(&self.target.relation_cols());
        let basis = image_basis(&gens);
        let rels = solve_matrix(&basis, &self.target.relation_cols())
            .expect("target relations lie in the image lattice");
        let group = FGAbelianGroup::from_presentation(rels.transpose());
        let incl = GroupHom { source: group.clone(), target: self.target.clone(), matrix: basis };
        (group, incl)
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> (FGAbelianGroup, GroupHom) {
        let presentation = self.target.presentation.vstack(&self.matrix.transpose());
        let group = FGAbelianGroup::from_presentation(presentation);
        let proj = GroupHom {
            source: self.target.clone(),
            target: group.clone(),
            matrix: IntMat::identity(self.target.gens()),
        };
        (group, proj)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().0.is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().0.is_zero()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}

/// `image(f) = kernel(g)` as subgroups of the middle group.
pub fn is_exact_at(f: &GroupHom, g: &GroupHom) -> Result<bool, AbelianError> {
    if f.target.gens() != g.source.gens() || f.target != g.source {
        return Err(AbelianError::NotComposable);
    }
    let im = f.matrix.hstack(&f.target.relation_cols());
    let ker = g.kernel_preimage_lattice();
    Ok(lattice_eq(&im, &ker))
}

/// The group of homomorphisms `A -> B`, together with matrix representatives
/// for its canonical generators and classification of arbitrary maps.
#[derive(Clone, Debug)]
pub struct HomGroup {
    source: FGAbelianGroup,
    target: FGAbelianGroup,
    group: FGAbelianGroup,
    /// Basis columns for the lattice of well-defined matrices, in Z^{nB*nA}.
    basis: IntMat,
    quotient: Quotient,
}

fn vec_of(m: &IntMat) -> Vec<Int> {
    let mut v = Vec::with_capacity(m.nrows() * m.ncols());
    for j in 0..m.ncols() {
        for i in 0..m.nrows() {
            v.push(m[(i, j)]);
        }
    }
    v
}

fn unvec(v: &[Int], rows: usize, cols: usize) -> IntMat {
    IntMat::from_fn(rows, cols, |i, j| v[j * rows + i])
}

/// Compute `Hom(A, B)` by solving, over Z, for all matrices carrying the
/// relation lattice of `A` into that of `B`, modulo those landing inside
/// the relations of `B`.
pub fn hom_group(a: &FGAbelianGroup, b: &FGAbelianGroup) -> HomGroup {
    let (na, nb) = (a.gens(), b.gens());
    let arel = a.relation_cols(); // na x ma
    let brel = b.relation_cols(); // nb x mb
    let (ma, mb) = (arel.ncols(), brel.ncols());

    // Unknowns: vec(F) (column-major, nb*na) then y_1..y_ma (mb each).
    // Equations, for each source relation l_i: F l_i - brel y_i = 0.
    let unknowns = nb * na + ma * mb;
    let mut sys = IntMat::zeros(ma * nb, unknowns);
    for i in 0..ma {
        for r in 0..nb {
            let row = i * nb + r;
            for c in 0..na {
                sys[(row, c * nb + r)] = arel[(c, i)];
            }
            for k in 0..mb {
                sys[(row, nb * na + i * mb + k)] = -brel[(r, k)];
            }
        }
    }
    let ker = kernel_basis(&sys);
    // Projection to the vec(F) block generates the lattice of valid matrices.
    let valid = IntMat::from_fn(nb * na, ker.ncols(), |i, j| ker[(i, j)]);
    let basis = image_basis(&valid);

    // Null maps: one generator of brel placed in each source-generator slot.
    let mut null_cols = IntMat::zeros(nb * na, na * mb);
    for slot in 0..na {
        for k in 0..mb {
            for r in 0..nb {
                null_cols[(slot * nb + r, slot * mb + k)] = brel[(r, k)];
            }
        }
    }
    let rel_coords = solve_matrix(&basis, &null_cols)
        .expect("null maps are valid homomorphisms");
    let quotient = Quotient::new(basis.ncols(), &rel_coords);
    let group = quotient.group().clone();
    HomGroup { source: a.clone(), target: b.clone(), group, basis, quotient }
}

impl HomGroup {
    pub fn group(&self) -> &FGAbelianGroup {
        &self.group
    }

    /// A homomorphism representing canonical coordinates.
    pub fn representative(&self, coords: &[Int]) -> GroupHom {
        let lifted = self.quotient.lift(coords);
        let flat = self.basis.mul(&IntMat::column_vector(&lifted)).column(0);
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: unvec(&flat, self.target.gens(), self.source.gens()),
        }
    }

    /// Canonical coordinates of a homomorphism `A -> B`.
    pub fn classify(&self, h: &GroupHom) -> Vec<Int> {
        let flat = IntMat::column_vector(&vec_of(&h.matrix));
        let in_basis = solve_matrix(&self.basis, &flat)
            .expect("well-defined homomorphism lies in the Hom lattice");
        self.quotient.project(&in_basis.column(0))
    }

    pub fn generators(&self) -> Vec<GroupHom> {
        let n = self.group.gens();
        (0..n)
            .map(|i| {
                let mut coords = vec![0 as Int; n];
                coords[i] = 1;
                self.representative(&coords)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn() -> FGAbelianGroup {
        FGAbelianGroup::free(1)
    }

    #[test]
    fn presentations_normalize() {
        // [[2]] -> Z/2
        let g = FGAbelianGroup::from_presentation(IntMat::from_rows(vec![vec![2]]));
        assert_eq!((g.rank(), g.torsion()), (0, &[2 as Int][..]));
        // empty relations, 3 generators -> Z^3
        let g = FGAbelianGroup::from_presentation(IntMat::zeros(0, 3));
        assert_eq!((g.rank(), g.torsion()), (3, &[][..]));
        // [[2,0],[0,3]] -> Z/6 (frozen from enumerating Z^2/(2e1, 3e2): six classes)
        let g = FGAbelianGroup::from_presentation(IntMat::from_rows(vec![vec![2, 0], vec![0, 3]]));
        assert_eq!((g.rank(), g.torsion()), (0, &[6 as Int][..]));
    }

    #[test]
    fn hom_groups() {
        let z = zn();
        let h = hom_group(&z, &z);
        assert_eq!(h.group(), &FGAbelianGroup::free(1));
        // identity is a generator
        let id = GroupHom::identity(&z);
        let coords = h.classify(&id);
        assert_eq!(coords.iter().map(|c| c.abs()).sum::<Int>(), 1);

        let z2 = FGAbelianGroup::cyclic(2);
        let h = hom_group(&z2, &z);
        assert!(h.group().is_zero());

        // Hom(Z/4, Z/6) = Z/2, frozen from enumerating generator images
        // killed by 4 in Z/6 (namely 0 and 3).
        let z4 = FGAbelianGroup::cyclic(4);
        let z6 = FGAbelianGroup::cyclic(6);
        let h = hom_group(&z4, &z6);
        assert_eq!(h.group(), &FGAbelianGroup::cyclic(2));
        let gens = h.generators();
        assert_eq!(gens.len(), 1);
        assert!(!gens[0].is_zero_map());
    }

    #[test]
    fn kernel_cokernel_image() {
        let z = zn();
        let times2 = GroupHom::scalar(&z, 2);
        let (k, _) = times2.kernel();
        assert!(k.is_zero());
        let (c, _) = times2.cokernel();
        assert_eq!(c, FGAbelianGroup::cyclic(2));
        let (im, incl) = times2.image();
        assert_eq!(im, FGAbelianGroup::free(1));
        assert!(incl.is_injective());

        let zero = GroupHom::zero(&z, &z);
        let (k, _) = zero.kernel();
        assert_eq!(k, FGAbelianGroup::free(1));
        let (im, _) = zero.image();
        assert!(im.is_zero());

        // (1,2): Z^2 -> Z. Smith form of the 1x2 matrix gives kernel Z and
        // cokernel 0 (frozen).
        let z2 = FGAbelianGroup::free(2);
        let h = GroupHom::new(z2, zn(), IntMat::from_rows(vec![vec![1, 2]])).unwrap();
        let (k, incl) = h.kernel();
        assert_eq!(k, FGAbelianGroup::free(1));
        assert!(h.compose(&incl).unwrap().is_zero_map());
        let (c, _) = h.cokernel();
        assert!(c.is_zero());
    }

    #[test]
    fn ill_defined_rejected() {
        let z2 = FGAbelianGroup::cyclic(2);
        let z = zn();
        // Z/2 -> Z by 1 is not well defined
        let err = GroupHom::new(z2, z, IntMat::from_rows(vec![vec![1]]));
        assert_eq!(err.unwrap_err(), AbelianError::IllDefined);
    }

    #[test]
    fn exactness() {
        let z = zn();
        let z2 = FGAbelianGroup::cyclic(2);
        // 0 -> Z -id-> Z exact at middle: image 0 equals kernel of id
        let from_zero = GroupHom::zero(&FGAbelianGroup::zero(), &z);
        let id = GroupHom::identity(&z);
        assert!(is_exact_at(&from_zero, &id).unwrap());
        // Z -x2-> Z -proj-> Z/2 exact at middle
        let times2 = GroupHom::scalar(&z, 2);
        let proj = GroupHom::new(z.clone(), z2.clone(), IntMat::identity(1)).unwrap();
        assert!(is_exact_at(&times2, &proj).unwrap());
        // Z -x4-> Z -proj-> Z/2 not exact: image 4Z strictly inside kernel 2Z
        let times4 = GroupHom::scalar(&z, 4);
        assert!(!is_exact_at(&times4, &proj).unwrap());
    }
}
