//! Scoped verdicts. Every asymptotic claim the engine makes is either proven
//! from the realized window alone or extended to a genuine proof by a
//! symbolic tail rule; the scope marker records which.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scope {
    /// Established from the realized window; silent about behavior beyond it.
    WindowProven,
    /// Established for the whole (infinite) object via its tail rule.
    TailProven,
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::WindowProven => write!(f, "window-proven"),
            Scope::TailProven => write!(f, "tail-proven"),
        }
    }
}

/// Three-valued answer for windowed decision procedures. `Unknown` is a
/// value, not an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<P, N> {
    Holds(P),
    Fails(N),
    UnknownWithinWindow,
}

impl<P, N> Verdict<P, N> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds(_))
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::UnknownWithinWindow)
    }
}
