//! JSON file formats for rings and modules.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use cihom_core::modules::FPModule;
use cihom_core::polyalg::{Poly, PolyRing, PrimeField};
use cihom_core::rings::CIRing;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarSpec {
    pub name: String,
    #[serde(default = "one")]
    pub deg: u32,
}

fn one() -> u32 {
    1
}

/// `F_p[vars] / (relations)`, with optional minimal primes given by generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingFile {
    pub p: u32,
    pub vars: Vec<VarSpec>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_primes: Option<Vec<Vec<String>>>,
}

/// A graded module: generator degrees and relation columns, one entry per
/// generator. `ring` is a path relative to the module file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    pub gens: Vec<i32>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
}

fn parse_poly(q: &PolyRing, s: &str, field: &str) -> Result<Poly> {
    q.parse(s).map_err(|e| anyhow!("{field}: {e}"))
}

impl RingFile {
    pub fn build(&self) -> Result<CIRing> {
        let field = PrimeField::new(self.p).map_err(|e| anyhow!("p: {e}"))?;
        let names = self.vars.iter().map(|v| v.name.clone()).collect();
        let weights = self.vars.iter().map(|v| v.deg).collect();
        let q = PolyRing::new(field, names, weights).map_err(|e| anyhow!("vars: {e}"))?;
        let rels = self
            .relations
            .iter()
            .enumerate()
            .map(|(i, s)| parse_poly(&q, s, &format!("relations[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        let primes = match &self.min_primes {
            None => None,
            Some(ps) => Some(
                ps.iter()
                    .enumerate()
                    .map(|(i, p)| {
                        p.iter()
                            .enumerate()
                            .map(|(j, s)| parse_poly(&q, s, &format!("min_primes[{i}][{j}]")))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        CIRing::new(q, rels, primes).map_err(|e| anyhow!("relations: {e}"))
    }

    /// Canonical form of a ring: polynomials in normalized notation.
    pub fn of(ring: &CIRing) -> RingFile {
        let q = ring.poly();
        let vars = q.names().iter().zip(q.var_weights()).map(|(n, &w)| VarSpec { name: n.clone(), deg: w }).collect();
        let min_primes = ring
            .min_primes()
            .map(|ps| ps.iter().map(|p| p.gens.iter().map(|g| q.format(g)).collect()).collect());
        RingFile {
            p: q.field().p(),
            vars,
            relations: ring.relations().iter().map(|f| q.format(f)).collect(),
            min_primes,
        }
    }
}

impl ModuleFile {
    pub fn build(&self, ring: Arc<CIRing>) -> Result<FPModule> {
        let q = ring.poly().clone();
        let mut cols = Vec::with_capacity(self.relations.len());
        for (j, col) in self.relations.iter().enumerate() {
            if col.len() != self.gens.len() {
                bail!("relations[{j}]: {} entries for {} generators", col.len(), self.gens.len());
            }
            let col = col
                .iter()
                .enumerate()
                .map(|(k, s)| parse_poly(&q, s, &format!("relations[{j}][{k}]")))
                .collect::<Result<Vec<_>>>()?;
            cols.push(col);
        }
        FPModule::from_columns(ring, self.gens.clone(), &cols).map_err(|e| anyhow!("relations: {e}"))
    }

    /// Canonical form of a module presentation.
    pub fn of(m: &FPModule, ring: Option<String>) -> ModuleFile {
        let q = m.ring().poly();
        let relations = m.columns().iter().map(|c| c.iter().map(|f| q.format(f)).collect()).collect();
        ModuleFile { ring, gens: m.gens().to_vec(), relations }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{}: malformed input", path.display()))
}

pub fn load_ring(path: &Path) -> Result<Arc<CIRing>> {
    let file: RingFile = read_json(path)?;
    let ring = file.build().with_context(|| format!("{}", path.display()))?;
    Ok(Arc::new(ring))
}

/// Path of the ring referenced by a module file, resolved against its directory.
pub fn module_ring_path(path: &Path, file: &ModuleFile) -> Option<PathBuf> {
    let rel = file.ring.as_ref()?;
    Some(path.parent().unwrap_or(Path::new(".")).join(rel))
}

/// Loads a module over `ring`, or over the ring its file names.
pub fn load_module(path: &Path, ring: Option<&Arc<CIRing>>) -> Result<FPModule> {
    let file: ModuleFile = read_json(path)?;
    let ring = match ring {
        Some(r) => r.clone(),
        None => {
            let rp = module_ring_path(path, &file)
                .ok_or_else(|| anyhow!("{}: ring: no ring given and none passed with --ring", path.display()))?;
            load_ring(&rp)?
        }
    };
    file.build(ring).with_context(|| format!("{}", path.display()))
}

/// Deterministic pretty JSON with sorted keys.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}
