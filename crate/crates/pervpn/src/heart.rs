//! A per-`n` working context: the algebra together with its named modules
//! (simples, projectives, injectives, standards, costandards, strings), the
//! census of indecomposables, and memoized minimal resolutions shared across
//! verification suites.

use crate::algebra::{build_an, An};
use crate::complex::ProjComplex;
use crate::field::Field;
use crate::homalg::minimal_resolution;
use crate::module::Module;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

/// A tag naming one of the distinguished modules. Different tags may realize
/// isomorphic modules; the canonical coincidences are
/// `Z+_{a,a} = Z-_{a,a} = IC_a`, `Z+_{a,a-1} = Delta_a`,
/// `Z-_{a,a-1} = Nabla_a`, `Delta_n = P_n` and `Nabla_n = I_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjectId {
    Simple(usize),
    Projective(usize),
    Injective(usize),
    Standard(usize),
    Costandard(usize),
    StringPlus(usize, usize),
    StringMinus(usize, usize),
}

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectId::Simple(k) => write!(f, "IC_{k}"),
            ObjectId::Projective(k) => write!(f, "P_{k}"),
            ObjectId::Injective(k) => write!(f, "I_{k}"),
            ObjectId::Standard(k) => write!(f, "Delta_{k}"),
            ObjectId::Costandard(k) => write!(f, "Nabla_{k}"),
            ObjectId::StringPlus(a, b) => write!(f, "Z+_{{{a},{b}}}"),
            ObjectId::StringMinus(a, b) => write!(f, "Z-_{{{a},{b}}}"),
        }
    }
}

/// The module category of one `A_n`, with named-object constructors and a
/// thread-safe cache of minimal resolutions. Values handed out are immutable
/// and shared, so suites can fan out over objects freely.
pub struct Heart<F: Field> {
    pub an: An<F>,
    resolutions: RwLock<HashMap<ObjectId, Arc<ProjComplex<F>>>>,
}

impl<F: Field> Heart<F> {
    pub fn new(n: usize) -> Self {
        Heart {
            an: build_an(n),
            resolutions: RwLock::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.an.n
    }

    /// Realize a tag as a module.
    pub fn module(&self, id: ObjectId) -> Module<F> {
        match id {
            ObjectId::Simple(k) => self.an.simple(k),
            ObjectId::Projective(k) => self.an.projective(k),
            ObjectId::Injective(k) => self.an.injective(k),
            ObjectId::Standard(k) => self.an.standard(k),
            ObjectId::Costandard(k) => self.an.costandard(k),
            ObjectId::StringPlus(a, b) => self.an.string_plus(a, b),
            ObjectId::StringMinus(a, b) => self.an.string_minus(a, b),
        }
    }

    /// The minimal projective resolution of a named module, memoized.
    pub fn resolution(&self, id: ObjectId) -> Arc<ProjComplex<F>> {
        if let Some(r) = self.resolutions.read().expect("resolution cache").get(&id) {
            return r.clone();
        }
        let r = Arc::new(minimal_resolution(&self.module(id)));
        self.resolutions
            .write()
            .expect("resolution cache")
            .entry(id)
            .or_insert(r)
            .clone()
    }

    /// The census of all indecomposables up to isomorphism: every string
    /// object (skipping the `Z-_{a,a} = Z+_{a,a}` duplicates) plus the
    /// projective-injectives. Exactly `n + (n+1)^2` entries.
    pub fn census(&self) -> Vec<ObjectId> {
        let n = self.an.n;
        let mut out = Vec::new();
        for k in 0..n {
            out.push(ObjectId::Projective(k));
        }
        for a in 0..=n {
            for b in 0..=a {
                out.push(ObjectId::StringPlus(a, b));
                if b < a {
                    out.push(ObjectId::StringMinus(a, b));
                }
            }
        }
        out
    }

    /// Every named tag (with coinciding realizations included), for scans
    /// that quantify over "all named objects" rather than the census.
    pub fn named(&self) -> Vec<ObjectId> {
        let n = self.an.n;
        let mut out = Vec::new();
        for k in 0..=n {
            out.push(ObjectId::Simple(k));
            out.push(ObjectId::Projective(k));
            out.push(ObjectId::Injective(k));
            out.push(ObjectId::Standard(k));
            out.push(ObjectId::Costandard(k));
        }
        for a in 0..=n {
            for b in 0..=a {
                out.push(ObjectId::StringPlus(a, b));
                if b < a {
                    out.push(ObjectId::StringMinus(a, b));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::module::modules_isomorphic;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn census_has_the_predicted_count_and_no_duplicate_tags() {
        for n in 1..=3usize {
            let heart: Heart<Q> = Heart::new(n);
            let census = heart.census();
            assert_eq!(census.len(), n + (n + 1) * (n + 1));
            let mut sorted = census.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), census.len());
        }
    }

    #[test]
    fn coinciding_tags_realize_isomorphic_modules() {
        let heart: Heart<Q> = Heart::new(2);
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let pairs = [
            (ObjectId::StringPlus(1, 1), ObjectId::Simple(1)),
            (ObjectId::StringPlus(2, 1), ObjectId::Standard(2)),
            (ObjectId::StringMinus(2, 1), ObjectId::Costandard(2)),
            (ObjectId::Standard(2), ObjectId::Projective(2)),
            (ObjectId::Costandard(2), ObjectId::Injective(2)),
            (ObjectId::Projective(0), ObjectId::Injective(0)),
            (ObjectId::Projective(1), ObjectId::Injective(1)),
            (ObjectId::Standard(0), ObjectId::Simple(0)),
        ];
        for (a, b) in pairs {
            assert!(
                modules_isomorphic(&heart.module(a), &heart.module(b), &mut rng).is_isomorphic(),
                "{a} should realize the same module as {b}"
            );
        }
    }

    #[test]
    fn resolutions_are_cached_and_shared() {
        let heart: Heart<Q> = Heart::new(1);
        let first = heart.resolution(ObjectId::Simple(1));
        let second = heart.resolution(ObjectId::Simple(1));
        assert!(Arc::ptr_eq(&first, &second));
    }
}
