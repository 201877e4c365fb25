//! Thread-safe Jack tables with an optional content-addressed disk cache.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use jackvo_core::jack::{jack_j_monomial, JackSource, JackTable, JackTriple, LinearExtension, GRAM_SCHMIDT_MAX_WEIGHT};
use jackvo_core::partition::HookKind;
use jackvo_core::symfun::to_monomial;
use jackvo_core::{Error, Partition, Result, SymFun};
use rand::seq::IndexedRandom;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::format::{deserialize_terms, serialize_terms, Basis, Coefficient, SerializedCoeff, SerializedSymFun};

/// Which normalization a cached file holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
pub enum Norm {
    P,
    Q,
    J,
}

impl Norm {
    pub fn pick<'a, C>(self, t: &'a JackTriple<C>) -> &'a SymFun<C> {
        match self {
            Norm::P => &t.p,
            Norm::Q => &t.q,
            Norm::J => &t.j,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CachedExpansion {
    param: SerializedCoeff,
    norm: Norm,
    lambda: Vec<usize>,
    expansion: SerializedSymFun,
}

/// Writes `bytes` to `path` via a temporary file in the same directory and a rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Integrity(format!("cache i/o: {}", e))
}

/// On-disk store: one JSON file per partition per normalization, named by
/// the SHA-256 of `(parameter, normalization, partition)`.
#[derive(Clone, Debug)]
pub struct DiskCache {
    root: PathBuf,
}

impl DiskCache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        DiskCache { root: root.into() }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn key_path<C: Coefficient>(&self, param: &C, norm: Norm, lambda: &Partition) -> PathBuf {
        let key = serde_json::to_string(&(param.to_serialized(), norm, lambda.parts())).expect("serializable key");
        let digest = hex::encode(Sha256::digest(key.as_bytes()));
        self.root.join("jack").join(&digest[..2]).join(format!("{}.json", digest))
    }

    fn load<C: Coefficient>(&self, param: &C, norm: Norm, lambda: &Partition) -> Result<Option<SymFun<C>>> {
        let path = self.key_path(param, norm, lambda);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(io_err(e)),
        };
        let c: CachedExpansion = serde_json::from_str(&text).map_err(io_err)?;
        if c.norm != norm || c.lambda != lambda.parts() || c.param != param.to_serialized() || c.expansion.basis != Basis::P {
            return Err(Error::Integrity(format!("cache entry {} does not match its key", path.display())));
        }
        Ok(Some(SymFun::from_terms(deserialize_terms(&c.expansion)?)))
    }

    fn store<C: Coefficient>(&self, param: &C, triple: &JackTriple<C>) -> Result<()> {
        for norm in [Norm::P, Norm::Q, Norm::J] {
            let entry = CachedExpansion {
                param: param.to_serialized(),
                norm,
                lambda: triple.lambda.parts().to_vec(),
                expansion: serialize_terms(Basis::P, norm.pick(triple).terms()),
            };
            let bytes = serde_json::to_vec_pretty(&entry).map_err(io_err)?;
            write_atomic(&self.key_path(param, norm, &triple.lambda), &bytes).map_err(io_err)?;
        }
        Ok(())
    }

    /// The whole table, if every file is present.
    fn load_table<C: Coefficient>(&self, weight: usize, param: &C) -> Result<Option<JackTable<C>>> {
        let mut triples = Vec::new();
        for lam in Partition::all(weight) {
            let (Some(p), Some(q), Some(j)) = (self.load(param, Norm::P, &lam)?, self.load(param, Norm::Q, &lam)?, self.load(param, Norm::J, &lam)?) else {
                return Ok(None);
            };
            let lower_norm = lam.full_hook_product(HookKind::Lower, param);
            let upper_norm = lam.full_hook_product(HookKind::Upper, param);
            triples.push(JackTriple { lambda: lam, p, q, j, lower_norm, upper_norm });
        }
        Ok(Some(JackTable::from_triples(weight, param.clone(), triples)?))
    }
}

type Slot<C> = Arc<OnceLock<Result<Arc<JackTable<C>>>>>;

/// Shared, lazily built Jack tables at one parameter. Each weight is built
/// once even under concurrent access.
pub struct JackCache<C> {
    param: C,
    order: LinearExtension,
    max_weight: usize,
    disk: Option<DiskCache>,
    slots: Mutex<BTreeMap<usize, Slot<C>>>,
    spot_checked: AtomicBool,
}

impl<C: Coefficient> JackCache<C> {
    pub fn new(param: C) -> Self {
        JackCache {
            param,
            order: LinearExtension::default(),
            max_weight: GRAM_SCHMIDT_MAX_WEIGHT,
            disk: None,
            slots: Mutex::new(BTreeMap::new()),
            spot_checked: AtomicBool::new(false),
        }
    }

    pub fn with_disk(mut self, disk: DiskCache) -> Self {
        self.disk = Some(disk);
        self
    }

    pub fn with_max_weight(mut self, w: usize) -> Self {
        self.max_weight = w;
        self
    }

    /// Builds every table up to `weight`, in parallel.
    pub fn warm(&self, weight: usize) -> Result<()> {
        use rayon::prelude::*;
        (0..=weight).into_par_iter().try_for_each(|w| self.table(w).map(|_| ()))
    }

    fn build(&self, weight: usize) -> Result<Arc<JackTable<C>>> {
        if weight > self.max_weight {
            return Err(Error::ResourceGuard(format!("Gram–Schmidt at weight {} exceeds {}", weight, self.max_weight)));
        }
        if let Some(disk) = &self.disk {
            if let Some(t) = disk.load_table(weight, &self.param)? {
                self.spot_check(&t)?;
                return Ok(Arc::new(t));
            }
        }
        let t = JackTable::gram_schmidt(weight, &self.param, self.order)?;
        if let Some(disk) = &self.disk {
            for triple in t.iter() {
                disk.store(&self.param, triple)?;
            }
        }
        Ok(Arc::new(t))
    }

    /// Once per cache: recompute one random loaded `J_λ` independently.
    fn spot_check(&self, t: &JackTable<C>) -> Result<()> {
        if t.weight() == 0 || self.spot_checked.swap(true, Ordering::SeqCst) {
            return Ok(());
        }
        let parts = Partition::all(t.weight());
        let lam = parts.choose(&mut rand::rng()).expect("nonempty");
        let cached = to_monomial(&t.get(lam).expect("complete table").j);
        if cached != jack_j_monomial(lam, &self.param)? {
            return Err(Error::Integrity(format!("cached J{} differs from a fresh computation", lam)));
        }
        Ok(())
    }
}

impl<C: Coefficient> JackSource<C> for JackCache<C> {
    fn param(&self) -> &C {
        &self.param
    }

    fn table(&self, weight: usize) -> Result<Arc<JackTable<C>>> {
        let slot = self.slots.lock().expect("cache lock").entry(weight).or_default().clone();
        slot.get_or_init(|| self.build(weight)).clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use jackvo_core::jack::JackMemo;
    use jackvo_core::RatFunc;

    #[test]
    fn disk_round_trip_and_reload() {
        let dir = tempfile::tempdir().unwrap();
        let a = RatFunc::alpha();
        let fresh = JackCache::new(a.clone()).with_disk(DiskCache::new(dir.path()));
        fresh.warm(4).unwrap();
        let reloaded = JackCache::new(a.clone()).with_disk(DiskCache::new(dir.path()));
        let memo = JackMemo::new(a);
        for w in 0..=4 {
            for lam in Partition::all(w) {
                let x = reloaded.triple(&lam).unwrap();
                let y = memo.triple(&lam).unwrap();
                assert_eq!(*x, *y);
            }
        }
        assert!(reloaded.spot_checked.load(Ordering::SeqCst));
    }

    #[test]
    fn corrupted_entry_is_reported() {
        let dir = tempfile::tempdir().unwrap();
        let a = RatFunc::alpha();
        JackCache::new(a.clone()).with_disk(DiskCache::new(dir.path())).warm(2).unwrap();
        let disk = DiskCache::new(dir.path());
        let path = disk.key_path(&a, Norm::J, &Partition::new(vec![2]).unwrap());
        let other = disk.key_path(&a, Norm::J, &Partition::new(vec![1, 1]).unwrap());
        fs::copy(&other, &path).unwrap();
        let again = JackCache::new(a).with_disk(disk);
        assert!(matches!(again.table(2), Err(Error::Integrity(_))));
    }

    #[test]
    fn guard_and_concurrency() {
        let c = JackCache::new(RatFunc::alpha()).with_max_weight(3);
        assert!(matches!(c.table(4), Err(Error::ResourceGuard(_))));
        c.warm(3).unwrap();
        let t1 = c.table(3).unwrap();
        let t2 = c.table(3).unwrap();
        assert!(Arc::ptr_eq(&t1, &t2));
    }
}
