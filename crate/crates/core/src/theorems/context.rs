use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cell::OnceCell;

use crate::homres::{
    depth, ext_dims_into_ring, free_locus_height, pd, rank_of, serre_from_ext_dims, tor_profile, ProjDim, TorProfile,
};
use crate::modules::FPModule;
use crate::pairings::{eta_from_profile, theta_from_profile, PairingResult};
use crate::rings::CIRing;
use crate::Result;

/// Lazily computed invariants of one module.
pub(crate) struct Facts {
    pub module: FPModule,
    ext_dims: OnceCell<Vec<(usize, Option<usize>)>>,
    depth: OnceCell<Option<usize>>,
    pd: OnceCell<ProjDim>,
    free_locus: OnceCell<usize>,
    rank: OnceCell<Result<Option<usize>>>,
    torsion_free: OnceCell<bool>,
    reflexive: OnceCell<bool>,
    zero: OnceCell<bool>,
}

impl Facts {
    pub fn new(module: FPModule) -> Self {
        Facts {
            module,
            ext_dims: OnceCell::new(),
            depth: OnceCell::new(),
            pd: OnceCell::new(),
            free_locus: OnceCell::new(),
            rank: OnceCell::new(),
            torsion_free: OnceCell::new(),
            reflexive: OnceCell::new(),
            zero: OnceCell::new(),
        }
    }

    pub fn ext_dims(&self) -> &[(usize, Option<usize>)] {
        self.ext_dims.get_or_init(|| ext_dims_into_ring(&self.module))
    }

    pub fn serre(&self, n: usize) -> bool {
        serre_from_ext_dims(self.module.ring().dim(), n, self.ext_dims().to_vec()).holds
    }

    pub fn depth(&self) -> Option<usize> {
        *self.depth.get_or_init(|| depth(&self.module))
    }

    pub fn is_zero(&self) -> bool {
        *self.zero.get_or_init(|| self.module.is_zero())
    }

    /// Nonzero of depth `dim R`.
    pub fn is_mcm(&self) -> bool {
        self.depth() == Some(self.module.ring().dim())
    }

    pub fn pd(&self) -> ProjDim {
        *self.pd.get_or_init(|| pd(&self.module))
    }

    pub fn is_free(&self) -> bool {
        self.pd() == ProjDim::Finite(0)
    }

    pub fn free_locus_height(&self) -> usize {
        *self.free_locus.get_or_init(|| free_locus_height(&self.module))
    }

    pub fn rank(&self) -> &Result<Option<usize>> {
        self.rank.get_or_init(|| rank_of(&self.module))
    }

    pub fn has_rank(&self) -> bool {
        matches!(self.rank(), Ok(Some(_)))
    }

    pub fn is_torsion_free(&self) -> bool {
        *self.torsion_free.get_or_init(|| self.module.is_torsion_free())
    }

    pub fn is_reflexive(&self) -> bool {
        *self.reflexive.get_or_init(|| self.module.is_reflexive())
    }

    pub fn length(&self) -> Option<u64> {
        self.module.length()
    }
}

/// Shared data for all checks on one pair `(M, N)`.
pub(crate) struct PairContext {
    pub ring: Arc<CIRing>,
    pub bound: usize,
    pub m: Facts,
    pub n: Facts,
    tensor: OnceCell<Facts>,
    profile: OnceCell<Result<TorProfile>>,
    eta_c: OnceCell<Result<PairingResult>>,
    theta: OnceCell<Result<PairingResult>>,
}

impl PairContext {
    pub fn new(m: &FPModule, n: &FPModule, bound: usize) -> Self {
        let ring = m.ring().clone();
        let bound = bound.max(ring.dim() + 4);
        PairContext {
            ring,
            bound,
            m: Facts::new(m.clone()),
            n: Facts::new(n.clone()),
            tensor: OnceCell::new(),
            profile: OnceCell::new(),
            eta_c: OnceCell::new(),
            theta: OnceCell::new(),
        }
    }

    /// Number of defining relations.
    pub fn c(&self) -> usize {
        self.ring.relative_codim()
    }

    pub fn d(&self) -> usize {
        self.ring.dim()
    }

    pub fn tensor(&self) -> &Facts {
        self.tensor.get_or_init(|| Facts::new(self.m.module.tensor(&self.n.module).expect("same ring")))
    }

    pub fn profile(&self) -> &Result<TorProfile> {
        self.profile.get_or_init(|| tor_profile(&self.m.module, &self.n.module, self.bound))
    }

    pub fn eta_c(&self) -> &Result<PairingResult> {
        self.eta_c.get_or_init(|| {
            let p = self.profile().clone()?;
            eta_from_profile(&p, self.c(), self.c().max(1), None)
        })
    }

    pub fn theta(&self) -> &Result<PairingResult> {
        self.theta.get_or_init(|| {
            if !self.ring.is_hypersurface() {
                return Err(crate::Error::NotHypersurface);
            }
            let p = self.profile().clone()?;
            theta_from_profile(&p, self.d())
        })
    }
}
