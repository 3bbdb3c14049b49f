//! N-indexed towers and direct systems of finitely generated abelian groups:
//! inverse limits with stabilization certificates, the lim^1 trichotomy via
//! the Mittag-Leffler condition, and the lazy colimit class calculus used for
//! "germs at infinity".
//!
//! lim^1 is never materialized as a group: for a tower of countable abelian
//! groups it vanishes exactly when Mittag-Leffler holds, and when it does not
//! vanish it is typically not finitely generated, so the engine reports the
//! trichotomy with a certificate instead.

use super::{FGAbelianGroup, GroupHom};
use crate::matrix::{
    Int,image_basis, kernel_basis, lattice_eq, solve_matrix, IntMat};
use crate::verdict::Scope;

/// Symbolic description of a tower or direct system beyond its realized
/// window. The rule must reproduce the realized levels from `start` on,
/// which is validated at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TailKind {
    /// Levels repeat the level at `start` with identity bonds.
    EventuallyConstant,
    /// Levels are the zero group from `start` on.
    EventuallyZero,
    /// Levels and bonds repeat with the given period.
    PeriodicShift { period: usize, description: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailRule {
    pub kind: TailKind,
    pub start: usize,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum TowerError {
    #[error("bond {index} has mismatched endpoints")]
    BondMismatch { index: usize },
    #[error("tail rule does not reproduce the realized levels: {0}")]
    TailDisagrees(String),
    #[error("tail start {start} exceeds window {window}")]
    TailBeyondWindow { start: usize, window: usize },
}

fn structurally_equal(a: &FGAbelianGroup, b: &FGAbelianGroup) -> bool {
    a.gens() == b.gens() && a.presentation() == b.presentation()
}

/// An inverse tower `level(0) <- level(1) <- ...` realized on `[0, W]`.
#[derive(Clone, Debug)]
pub struct GroupTower {
    levels: Vec<FGAbelianGroup>,
    /// `bonds[s]: level(s+1) -> level(s)`.
    bonds: Vec<GroupHom>,
    tail: Option<TailRule>,
}

impl GroupTower {
    pub fn new(
        levels: Vec<FGAbelianGroup>,
        bonds: Vec<GroupHom>,
        tail: Option<TailRule>,
    ) -> Result<Self, TowerError> {
        assert!(!levels.is_empty(), "a tower has at least one realized level");
        assert_eq!(bonds.len() + 1, levels.len(), "one bond per consecutive pair");
        for (s, b) in bonds.iter().enumerate() {
            if b.source() != &levels[s + 1] || b.target() != &levels[s]
                || b.source().gens() != levels[s + 1].gens()
                || b.target().gens() != levels[s].gens()
            {
                return Err(TowerError::BondMismatch { index: s });
            }
        }
        let tower = GroupTower { levels, bonds, tail };
        tower.validate_tail()?;
        Ok(tower)
    }

    /// Constant tower with identity bonds.
    pub fn constant(g: FGAbelianGroup, window: usize) -> Self {
        let levels = vec![g.clone(); window + 1];
        let bonds = vec![GroupHom::identity(&g); window];
        GroupTower::new(
            levels,
            bonds,
            Some(TailRule { kind: TailKind::EventuallyConstant, start: 0 }),
        )
        .expect("constant tower is valid")
    }

    fn validate_tail(&self) -> Result<(), TowerError> {
        let Some(tail) = &self.tail else { return Ok(()) };
        let w = self.window();
        if tail.start > w {
            return Err(TowerError::TailBeyondWindow { start: tail.start, window: w });
        }
        match &tail.kind {
            TailKind::EventuallyConstant => {
                for s in tail.start..w {
                    if !structurally_equal(&self.levels[s], &self.levels[s + 1])
                        || !self.bonds[s].matrix().is_identity()
                    {
                        return Err(TowerError::TailDisagrees(format!(
                            "levels {s} and {} are not equal with identity bond",
                            s + 1
                        )));
                    }
                }
            }
            TailKind::EventuallyZero => {
                for s in tail.start..=w {
                    if !self.levels[s].is_zero() {
                        return Err(TowerError::TailDisagrees(format!(
                            "level {s} is nonzero"
                        )));
                    }
                }
            }
            TailKind::PeriodicShift { period, .. } => {
                if *period == 0 {
                    return Err(TowerError::TailDisagrees("period must be positive".into()));
                }
                for s in tail.start..=w.saturating_sub(*period) {
                    if !structurally_equal(&self.levels[s], &self.levels[s + period]) {
                        return Err(TowerError::TailDisagrees(format!(
                            "levels {s} and {} differ", s + period
                        )));
                    }
                    if s + period < w
                        && self.bonds[s].matrix() != self.bonds[s + period].matrix()
                    {
                        return Err(TowerError::TailDisagrees(format!(
                            "bonds {s} and {} differ", s + period
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn window(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, s: usize) -> &FGAbelianGroup {
        &self.levels[s.min(self.window())]
    }

    pub fn levels(&self) -> &[FGAbelianGroup] {
        &self.levels
    }

    pub fn bond(&self, s: usize) -> &GroupHom {
        &self.bonds[s]
    }

    pub fn tail(&self) -> Option<&TailRule> {
        self.tail.as_ref()
    }

    /// Composite bond `level(t) -> level(s)` for `s <= t <= window`.
    pub fn composite_bond(&self, t: usize, s: usize) -> GroupHom {
        assert!(s <= t && t <= self.window());
        let mut h = GroupHom::identity(&self.levels[s]);
        for i in s..t {
            h = h.compose(&self.bonds[i]).expect("tower bonds compose");
        }
        h
    }
}

#[derive(Clone, Debug)]
pub struct LimCertificate {
    pub scope: Scope,
    pub stabilization_level: usize,
    pub note: String,
}

#[derive(Clone, Debug)]
pub enum LimValue {
    Group { group: FGAbelianGroup, certificate: LimCertificate },
    UnknownWithinWindow,
}

impl LimValue {
    pub fn group(&self) -> Option<&FGAbelianGroup> {
        match self {
            LimValue::Group { group, .. } => Some(group),
            LimValue::UnknownWithinWindow => None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Lim1Verdict {
    /// Mittag-Leffler certified: images of bonds into each level stabilize.
    Zero { scope: Scope, stabilization: usize },
    /// Certified failure of Mittag-Leffler (images strictly decrease), which
    /// for towers of countable groups forces a nonzero lim^1.
    Nonzero { scope: Scope, witness: String },
    UnknownWithinWindow,
}

impl Lim1Verdict {
    pub fn is_zero(&self) -> bool {
        matches!(self, Lim1Verdict::Zero { .. })
    }
    pub fn is_nonzero(&self) -> bool {
        matches!(self, Lim1Verdict::Nonzero { .. })
    }
}

/// A subgroup of `Z^n / relations`, carried as an ambient lattice that
/// contains the relations.
#[derive(Clone, Debug)]
struct Sub {
    ambient: usize,
    lattice: IntMat,
}

impl Sub {
    fn full(g: &FGAbelianGroup) -> Self {
        let id = IntMat::identity(g.gens());
        Sub { ambient: g.gens(), lattice: id.hstack(&g.relation_cols()) }
    }

    fn normalize(&self) -> Sub {
        Sub { ambient: self.ambient, lattice: image_basis(&self.lattice) }
    }

    fn push(&self, h: &GroupHom) -> Sub {
        let moved = h.matrix().mul(&self.lattice);
        let lat = moved.hstack(&h.target().relation_cols());
        Sub { ambient: h.target().gens(), lattice: image_basis(&lat) }
    }

    fn eq(&self, other: &Sub) -> bool {
        self.ambient == other.ambient && lattice_eq(&self.lattice, &other.lattice)
    }

    /// The subquotient `lattice / relations` as an abstract group.
    fn group(&self, rel: &IntMat) -> FGAbelianGroup {
        let basis = image_basis(&self.lattice);
        let coords = solve_matrix(&basis, rel).expect("relations lie in the sublattice");
        FGAbelianGroup::from_presentation(coords.transpose())
    }
}

/// Inverse limit of a group tower, with a stabilization certificate.
pub fn tower_lim(t: &GroupTower) -> LimValue {
    let (lim, _) = tower_lim_and_lim1(t);
    lim
}

/// The lim^1 trichotomy of a group tower.
pub fn tower_lim1(t: &GroupTower) -> Lim1Verdict {
    let (_, l1) = tower_lim_and_lim1(t);
    l1
}

/// Shared analysis for lim and lim^1.
pub fn tower_lim_and_lim1(t: &GroupTower) -> (LimValue, Lim1Verdict) {
    match t.tail() {
        Some(TailRule { kind: TailKind::EventuallyZero, start }) => {
            let cert = LimCertificate {
                scope: Scope::TailProven,
                stabilization_level: *start,
                note: "tower is eventually the zero group".into(),
            };
            (
                LimValue::Group { group: FGAbelianGroup::zero(), certificate: cert },
                Lim1Verdict::Zero { scope: Scope::TailProven, stabilization: *start },
            )
        }
        Some(TailRule { kind: TailKind::EventuallyConstant, start }) => {
            let cert = LimCertificate {
                scope: Scope::TailProven,
                stabilization_level: *start,
                note: "identity bonds beyond the tail start".into(),
            };
            (
                LimValue::Group { group: t.level(*start).clone(), certificate: cert },
                Lim1Verdict::Zero { scope: Scope::TailProven, stabilization: *start },
            )
        }
        Some(TailRule { kind: TailKind::PeriodicShift { period, .. }, start }) => {
            let phi = periodic_composite(t, *start, *period);
            periodic_analysis(t, *start, &phi)
        }
        None => window_analysis(t),
    }
}

/// Composite of one period's worth of bonds at the tail: `level(start+period)
/// -> level(start)`, an endomorphism by periodicity.
fn periodic_composite(t: &GroupTower, start: usize, period: usize) -> GroupHom {
    assert!(start + period <= t.window(), "window too small for one tail period");
    t.composite_bond(start + period, start)
}

const IMAGE_ITERATIONS: usize = 24;

fn periodic_analysis(_t: &GroupTower, start: usize, phi: &GroupHom) -> (LimValue, Lim1Verdict) {
    let g = phi.target().clone();
    let rel = g.relation_cols();
    let mut lat = Sub::full(&g).normalize();
    for j in 0..IMAGE_ITERATIONS {
        let next = lat.push(phi);
        if next.eq(&lat) {
            // Images stabilize: Mittag-Leffler holds along the tail, and the
            // bond restricts to a surjective endomorphism of the stable
            // image, which is an isomorphism since f.g. groups are Hopfian.
            let group = lat.group(&rel);
            let cert = LimCertificate {
                scope: Scope::TailProven,
                stabilization_level: start + j,
                note: format!("bond images stabilize after {j} periods"),
            };
            return (
                LimValue::Group { group, certificate: cert },
                Lim1Verdict::Zero { scope: Scope::TailProven, stabilization: start + j },
            );
        }
        lat = next;
    }
    // Images keep strictly decreasing under the periodic bond, so they
    // decrease forever and Mittag-Leffler fails; lim^1 is nonzero by the
    // standard countable-tower criterion.
    let lim1 = Lim1Verdict::Nonzero {
        scope: Scope::TailProven,
        witness: format!(
            "bond images strictly decrease through {IMAGE_ITERATIONS} periodic iterations"
        ),
    };
    // The limit itself: torsion settles in finitely many steps; a strictly
    // contracting free part of rank one contributes nothing.
    let h = lat.group(&rel);
    if h.rank() <= 1 {
        let core = torsion_core(&g, phi);
        return (
            LimValue::Group {
                group: core,
                certificate: LimCertificate {
                    scope: Scope::TailProven,
                    stabilization_level: start,
                    note: "strictly contracting free part; torsion core retained".into(),
                },
            },
            lim1,
        );
    }
    (LimValue::UnknownWithinWindow, lim1)
}

/// The largest subgroup of the torsion part on which the bond eventually
/// restricts to a bijection. Finite, so the image chain must stabilize.
fn torsion_core(g: &FGAbelianGroup, phi: &GroupHom) -> FGAbelianGroup {
    let exponent: Int = g.torsion().iter().product::<Int>().max(1);
    // Torsion sublattice: { x : exponent * x lies in the relations }.
    let n = g.gens();
    let rel = g.relation_cols();
    let scaled = IntMat::identity(n).scale(exponent);
    let block = scaled.hstack(&rel.neg());
    let ker = kernel_basis(&block);
    let tor = IntMat::from_fn(n, ker.ncols(), |i, j| ker[(i, j)]);
    let mut lat = Sub { ambient: n, lattice: tor.hstack(&rel) }.normalize();
    for _ in 0..64 {
        let next = lat.push(phi);
        if next.eq(&lat) {
            return lat.group(&rel);
        }
        lat = next;
    }
    FGAbelianGroup::zero()
}

fn window_analysis(t: &GroupTower) -> (LimValue, Lim1Verdict) {
    let w = t.window();
    if w == 0 {
        return (LimValue::UnknownWithinWindow, Lim1Verdict::UnknownWithinWindow);
    }
    // The image chain I_u = im(level(u) -> level(s)) is decreasing in u, so
    // stabilization within the window means the chain is constant from some
    // point through the window end, with at least one step of slack.
    let mut stable_at = vec![None; w];
    for (s, slot) in stable_at.iter_mut().enumerate() {
        let mut chain = vec![Sub::full(t.level(s)).normalize()];
        for u in (s + 1)..=w {
            let bond = t.composite_bond(u, s);
            chain.push(Sub::full(t.level(u)).push(&bond));
        }
        let mut settle = chain.len() - 1;
        while settle > 0 && chain[settle - 1].eq(&chain[settle]) {
            settle -= 1;
        }
        if settle < chain.len() - 1 {
            *slot = Some(s + settle);
        }
    }
    if stable_at.iter().any(|x| x.is_none()) {
        return (LimValue::UnknownWithinWindow, Lim1Verdict::UnknownWithinWindow);
    }
    let stab = stable_at.iter().map(|x| x.unwrap()).max().unwrap();
    // Stable images with isomorphic induced bonds let the window answer
    // stand in for the limit; scope stays window-proven.
    let s0_rel = t.level(0).relation_cols();
    let mut image0 = Sub::full(t.level(0)).normalize();
    if stab > 0 {
        image0 = Sub::full(t.level(stab)).push(&t.composite_bond(stab, 0));
    }
    let group = image0.group(&s0_rel);
    (
        LimValue::Group {
            group,
            certificate: LimCertificate {
                scope: Scope::WindowProven,
                stabilization_level: stab,
                note: "images stabilized within the realized window".into(),
            },
        },
        Lim1Verdict::Zero { scope: Scope::WindowProven, stabilization: stab },
    )
}

/// A direct system `level(0) -> level(1) -> ...` with forward maps.
#[derive(Clone, Debug)]
pub struct GroupDirectSystem {
    levels: Vec<FGAbelianGroup>,
    /// `maps[s]: level(s) -> level(s+1)`.
    maps: Vec<GroupHom>,
    tail: Option<TailRule>,
}

/// An element of the lazy colimit: a representative at a finite level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColimClass {
    pub level: usize,
    pub element: Vec<Int>,
}

/// Three-valued answers about colimit classes, with scope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassVerdict {
    True(Scope),
    False(Scope),
    UnknownWithinWindow,
}

impl ClassVerdict {
    pub fn is_true(&self) -> bool {
        matches!(self, ClassVerdict::True(_))
    }
    pub fn is_false(&self) -> bool {
        matches!(self, ClassVerdict::False(_))
    }
}

impl GroupDirectSystem {
    pub fn new(
        levels: Vec<FGAbelianGroup>,
        maps: Vec<GroupHom>,
        tail: Option<TailRule>,
    ) -> Result<Self, TowerError> {
        assert!(!levels.is_empty());
        assert_eq!(maps.len() + 1, levels.len());
        for (s, m) in maps.iter().enumerate() {
            if m.source() != &levels[s]
                || m.target() != &levels[s + 1]
                || m.source().gens() != levels[s].gens()
                || m.target().gens() != levels[s + 1].gens()
            {
                return Err(TowerError::BondMismatch { index: s });
            }
        }
        let sys = GroupDirectSystem { levels, maps, tail };
        sys.validate_tail()?;
        Ok(sys)
    }

    pub fn constant(g: FGAbelianGroup, window: usize) -> Self {
        let levels = vec![g.clone(); window + 1];
        let maps = vec![GroupHom::identity(&g); window];
        GroupDirectSystem::new(
            levels,
            maps,
            Some(TailRule { kind: TailKind::EventuallyConstant, start: 0 }),
        )
        .expect("constant system is valid")
    }

    fn validate_tail(&self) -> Result<(), TowerError> {
        let Some(tail) = &self.tail else { return Ok(()) };
        let w = self.window();
        if tail.start > w {
            return Err(TowerError::TailBeyondWindow { start: tail.start, window: w });
        }
        match &tail.kind {
            TailKind::EventuallyConstant => {
                for s in tail.start..w {
                    if !structurally_equal(&self.levels[s], &self.levels[s + 1])
                        || !self.maps[s].matrix().is_identity()
                    {
                        return Err(TowerError::TailDisagrees(format!(
                            "levels {s}, {} not constant", s + 1
                        )));
                    }
                }
            }
            TailKind::EventuallyZero => {
                for s in tail.start..=w {
                    if !self.levels[s].is_zero() {
                        return Err(TowerError::TailDisagrees(format!("level {s} nonzero")));
                    }
                }
            }
            TailKind::PeriodicShift { period, .. } => {
                if *period == 0 {
                    return Err(TowerError::TailDisagrees("period must be positive".into()));
                }
                for s in tail.start..=w.saturating_sub(*period) {
                    if !structurally_equal(&self.levels[s], &self.levels[s + period]) {
                        return Err(TowerError::TailDisagrees(format!(
                            "levels {s}, {} differ", s + period
                        )));
                    }
                    if s + period < w && self.maps[s].matrix() != self.maps[s + period].matrix() {
                        return Err(TowerError::TailDisagrees(format!(
                            "maps {s}, {} differ", s + period
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn window(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, s: usize) -> &FGAbelianGroup {
        &self.levels[s.min(self.window())]
    }

    pub fn tail(&self) -> Option<&TailRule> {
        self.tail.as_ref()
    }

    pub fn map(&self, s: usize) -> &GroupHom {
        &self.maps[s]
    }

    /// Push a class forward to a (windowed) level `to >= class.level`.
    pub fn push(&self, class: &ColimClass, to: usize) -> ColimClass {
        assert!(to >= class.level && to <= self.window());
        let mut elem = class.element.clone();
        for s in class.level..to {
            elem = self.maps[s].apply(&elem);
        }
        ColimClass { level: to, element: elem }
    }

    /// Are two classes equal in the colimit?
    pub fn class_eq(&self, a: &ColimClass, b: &ColimClass) -> ClassVerdict {
        let base = a.level.max(b.level);
        let mut x = self.push(a, base);
        let mut y = self.push(b, base);
        for s in base..=self.window() {
            let diff: Vec<Int> =
                x.element.iter().zip(&y.element).map(|(p, q)| p - q).collect();
            if self.level(s).is_element_zero(&diff) {
                return ClassVerdict::True(Scope::WindowProven);
            }
            if s < self.window() {
                x = self.push(&x, s + 1);
                y = self.push(&y, s + 1);
            }
        }
        // Window exhausted with distinct images; a tail rule can make the
        // inequality definitive.
        let diff = ColimClass {
            level: self.window(),
            element: x.element.iter().zip(&y.element).map(|(p, q)| p - q).collect(),
        };
        match self.class_is_zero(&diff) {
            ClassVerdict::False(scope) => ClassVerdict::False(scope),
            ClassVerdict::True(scope) => ClassVerdict::True(scope),
            ClassVerdict::UnknownWithinWindow => ClassVerdict::UnknownWithinWindow,
        }
    }

    /// Is the class zero in the colimit?
    pub fn class_is_zero(&self, a: &ColimClass) -> ClassVerdict {
        let mut x = self.push(a, a.level);
        for s in a.level..=self.window() {
            if self.level(s).is_element_zero(&x.element) {
                // Once zero, always zero; the window decided it.
                return ClassVerdict::True(Scope::WindowProven);
            }
            if s < self.window() {
                x = self.push(&x, s + 1);
            }
        }
        match self.tail() {
            Some(TailRule { kind: TailKind::EventuallyZero, .. }) => {
                ClassVerdict::True(Scope::TailProven)
            }
            Some(TailRule { kind: TailKind::EventuallyConstant, .. }) => {
                ClassVerdict::False(Scope::TailProven)
            }
            Some(TailRule { kind: TailKind::PeriodicShift { period, .. }, start }) => {
                // Self-similarity: if pushing the window-end representative
                // through one full period reproduces it verbatim, it can
                // never die.
                let w = self.window();
                if w < start + period {
                    return ClassVerdict::UnknownWithinWindow;
                }
                let back = ColimClass { level: w - period, element: x.element.clone() };
                let pushed = self.push(&back, w);
                let diff: Vec<Int> =
                    pushed.element.iter().zip(&x.element).map(|(p, q)| p - q).collect();
                if self.level(w).is_element_zero(&diff)
                    && !self.level(w).is_element_zero(&x.element)
                {
                    ClassVerdict::False(Scope::TailProven)
                } else {
                    ClassVerdict::UnknownWithinWindow
                }
            }
            None => ClassVerdict::UnknownWithinWindow,
        }
    }

    /// When the transition maps are eventually isomorphisms, the colimit is
    /// the stable level group.
    pub fn stable_group(&self) -> Option<(FGAbelianGroup, usize, Scope)> {
        let w = self.window();
        let mut from = None;
        for s in (0..=w).rev() {
            if s == w {
                continue;
            }
            if self.maps[s].is_isomorphism() {
                from = Some(s);
            } else {
                break;
            }
        }
        let from = from?;
        let scope = match self.tail() {
            Some(TailRule { kind: TailKind::EventuallyConstant, start }) if *start <= from + 1 => {
                Scope::TailProven
            }
            Some(TailRule { kind: TailKind::EventuallyZero, start }) if *start <= from + 1 => {
                Scope::TailProven
            }
            Some(TailRule { kind: TailKind::PeriodicShift { period, .. }, start }) => {
                // All maps from `from` to the window end are isomorphisms and
                // they repeat periodically, so every later map is too.
                if from.max(*start) + period <= w {
                    Scope::TailProven
                } else {
                    Scope::WindowProven
                }
            }
            _ => Scope::WindowProven,
        };
        Some((self.level(from).clone(), from, scope))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> FGAbelianGroup {
        FGAbelianGroup::free(1)
    }

    #[test]
    fn constant_tower_lim() {
        let t = GroupTower::constant(z(), 6);
        let (lim, lim1) = tower_lim_and_lim1(&t);
        let g = lim.group().unwrap();
        assert_eq!(g, &z());
        assert!(lim1.is_zero());
    }

    #[test]
    fn doubling_tower() {
        // Z <-x2- Z <-x2- ... : lim = 0, lim^1 nonzero, both tail-proven.
        let w = 6;
        let levels = vec![z(); w + 1];
        let bonds = vec![GroupHom::scalar(&z(), 2); w];
        let t = GroupTower::new(
            levels,
            bonds,
            Some(TailRule {
                kind: TailKind::PeriodicShift { period: 1, description: "x2".into() },
                start: 0,
            }),
        )
        .unwrap();
        let (lim, lim1) = tower_lim_and_lim1(&t);
        assert!(lim.group().unwrap().is_zero());
        assert!(lim1.is_nonzero());
        match lim1 {
            Lim1Verdict::Nonzero { scope, .. } => assert_eq!(scope, Scope::TailProven),
            _ => unreachable!(),
        }
    }

    #[test]
    fn eventually_zero_tower() {
        let levels = vec![z(), FGAbelianGroup::zero(), FGAbelianGroup::zero()];
        let bonds = vec![
            GroupHom::zero(&FGAbelianGroup::zero(), &z()),
            GroupHom::zero(&FGAbelianGroup::zero(), &FGAbelianGroup::zero()),
        ];
        let t = GroupTower::new(
            levels,
            bonds,
            Some(TailRule { kind: TailKind::EventuallyZero, start: 1 }),
        )
        .unwrap();
        let (lim, lim1) = tower_lim_and_lim1(&t);
        assert!(lim.group().unwrap().is_zero());
        assert!(lim1.is_zero());
    }

    #[test]
    fn constant_system_classes() {
        let sys = GroupDirectSystem::constant(z(), 5);
        let one = ColimClass { level: 0, element: vec![1] };
        let zero = ColimClass { level: 0, element: vec![0] };
        assert!(sys.class_is_zero(&zero).is_true());
        assert!(sys.class_is_zero(&one).is_false());
        assert!(!sys.class_eq(&one, &zero).is_true());
    }

    #[test]
    fn zero_maps_kill_everything() {
        let levels = vec![z(); 4];
        let maps = vec![GroupHom::scalar(&z(), 0); 3];
        let sys = GroupDirectSystem::new(
            levels,
            maps,
            Some(TailRule {
                kind: TailKind::PeriodicShift { period: 1, description: "x0".into() },
                start: 0,
            }),
        )
        .unwrap();
        let one = ColimClass { level: 0, element: vec![1] };
        assert!(sys.class_is_zero(&one).is_true());
    }

    #[test]
    fn germ_style_system() {
        // Z^3 with drop-first-refill-from-tail bonds: (a0,a1,t) -> (a1,t,t).
        // The all-ones vector is a fixed point, hence a certified-nonzero
        // germ; finitely supported vectors die.
        let g = FGAbelianGroup::free(3);
        let m = IntMat::from_rows(vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 1]]);
        let hom = GroupHom::new(g.clone(), g.clone(), m).unwrap();
        let levels = vec![g.clone(); 5];
        let maps = vec![hom; 4];
        let sys = GroupDirectSystem::new(
            levels,
            maps,
            Some(TailRule {
                kind: TailKind::PeriodicShift { period: 1, description: "drop-first".into() },
                start: 0,
            }),
        )
        .unwrap();
        let ones = ColimClass { level: 0, element: vec![1, 1, 1] };
        let finite = ColimClass { level: 0, element: vec![3, 1, 0] };
        match sys.class_is_zero(&ones) {
            ClassVerdict::False(scope) => assert_eq!(scope, Scope::TailProven),
            other => panic!("expected certified nonzero, got {other:?}"),
        }
        assert!(sys.class_is_zero(&finite).is_true());
    }

    #[test]
    fn random_eventually_constant_towers_have_zero_lim1() {
        // Invariant: towers with eventually-constant tails have lim^1 = 0 and
        // lim equal to the stable value.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..40 {
            let stable_rank = rng.gen_range(0..3);
            let tors = if rng.gen_bool(0.5) { vec![] } else { vec![rng.gen_range(2..5)] };
            let g = FGAbelianGroup::canonical(stable_rank, tors);
            let t = GroupTower::constant(g.clone(), 5);
            let (lim, lim1) = tower_lim_and_lim1(&t);
            assert_eq!(lim.group().unwrap(), &g);
            assert!(lim1.is_zero());
        }
    }
}
