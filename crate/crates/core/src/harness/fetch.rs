use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::{Duration, Instant};

use super::{parse_bfile, ANumber, HarnessError, SequenceRecord};

pub const DEFAULT_BASE_URL: &str = "https://oeis.org";
const MIN_INTERVAL: Duration = Duration::from_secs(1);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CachePolicy {
    /// Use a cached copy if there is one, otherwise download.
    #[default]
    PreferCache,
    /// Always download and overwrite the cache.
    Refresh,
    /// Never touch the network.
    Offline,
}

/// Where b-files come from and where they are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FetchConfig {
    pub base_url: String,
    pub cache_dir: PathBuf,
    pub policy: CachePolicy,
    /// Network access must be switched on explicitly.
    pub network: bool,
}

impl FetchConfig {
    /// Read `HATEFUL_OEIS_URL`, `HATEFUL_CACHE_DIR`, `HATEFUL_NETWORK` and
    /// `HATEFUL_OFFLINE` from the environment.
    pub fn from_env() -> Self {
        let var = |k: &str| std::env::var(k).ok().filter(|v| !v.is_empty());
        let truthy = |k: &str| var(k).is_some_and(|v| !matches!(v.as_str(), "0" | "false" | "no"));
        let cache_dir = var("HATEFUL_CACHE_DIR").map(PathBuf::from).unwrap_or_else(default_cache_dir);
        let offline = truthy("HATEFUL_OFFLINE");
        FetchConfig {
            base_url: var("HATEFUL_OEIS_URL").unwrap_or_else(|| DEFAULT_BASE_URL.to_string()),
            cache_dir,
            policy: if offline { CachePolicy::Offline } else { CachePolicy::PreferCache },
            network: truthy("HATEFUL_NETWORK") && !offline,
        }
    }

    pub fn url(&self, a: ANumber) -> String {
        format!("{}/{}/{}", self.base_url.trim_end_matches('/'), a, a.bfile_name())
    }

    pub fn cache_path(&self, a: ANumber) -> PathBuf {
        self.cache_dir.join(a.bfile_name())
    }
}

fn default_cache_dir() -> PathBuf {
    std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir)
        .join("hateful")
}

/// One lock per A-number so concurrent callers share a single download.
fn entry_lock(a: ANumber) -> Arc<Mutex<()>> {
    static LOCKS: OnceLock<Mutex<HashMap<ANumber, Arc<Mutex<()>>>>> = OnceLock::new();
    let mut map = LOCKS.get_or_init(Default::default).lock().unwrap_or_else(|e| e.into_inner());
    map.entry(a).or_default().clone()
}

fn rate_limit() {
    static LAST: Mutex<Option<Instant>> = Mutex::new(None);
    let mut last = LAST.lock().unwrap_or_else(|e| e.into_inner());
    if let Some(t) = *last {
        let wait = MIN_INTERVAL.saturating_sub(t.elapsed());
        if !wait.is_zero() {
            std::thread::sleep(wait);
        }
    }
    *last = Some(Instant::now());
}

/// Load the b-file for `a`, from the cache or the network per `config`.
pub fn fetch_bfile(a: ANumber, config: &FetchConfig) -> Result<SequenceRecord, HarnessError> {
    let lock = entry_lock(a);
    let _guard = lock.lock().unwrap_or_else(|e| e.into_inner());
    let path = config.cache_path(a);
    if config.policy != CachePolicy::Refresh {
        match std::fs::read_to_string(&path) {
            Ok(text) => return parse_bfile(&text, a),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(e.into()),
        }
    }
    if config.policy == CachePolicy::Offline {
        return Err(HarnessError::NotInCache(a));
    }
    if !config.network {
        return Err(HarnessError::NetworkDisabled);
    }
    let url = config.url(a);
    rate_limit();
    let text = download(&url)?;
    let record = parse_bfile(&text, a)?;
    std::fs::create_dir_all(&config.cache_dir)?;
    let tmp = path.with_extension("part");
    std::fs::write(&tmp, &text)?;
    std::fs::rename(&tmp, &path)?;
    Ok(record)
}

#[cfg(feature = "fetch")]
fn download(url: &str) -> Result<String, HarnessError> {
    let http = |reason: String| HarnessError::Http { url: url.to_string(), reason };
    let agent: ureq::Agent =
        ureq::Agent::config_builder().timeout_global(Some(Duration::from_secs(60))).build().into();
    let mut resp = agent.get(url).call().map_err(|e| http(e.to_string()))?;
    resp.body_mut().read_to_string().map_err(|e| http(e.to_string()))
}

#[cfg(not(feature = "fetch"))]
fn download(url: &str) -> Result<String, HarnessError> {
    Err(HarnessError::Http { url: url.to_string(), reason: "built without the `fetch` feature".into() })
}
