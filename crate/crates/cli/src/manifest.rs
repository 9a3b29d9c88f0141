use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Provenance block written at the top of every JSON artifact.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunManifest {
    pub command: String,
    pub inputs: Value,
    pub tool_version: String,
    /// SHA-256 of the canonical (sorted-key, compact) JSON of `inputs`.
    pub config_hash: String,
    /// Only present when explicitly requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl RunManifest {
    pub fn new(command: &str, inputs: Value, with_timestamp: bool) -> Self {
        let canonical = serde_json::to_string(&inputs).expect("serializable inputs");
        let config_hash = hex::encode(Sha256::digest(canonical.as_bytes()));
        let timestamp = with_timestamp.then(|| {
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        });
        RunManifest {
            command: command.to_string(),
            inputs,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config_hash,
            timestamp,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn hash_ignores_key_order() {
        let a = RunManifest::new("verify", json!({"d": 1, "alpha": [0.5]}), false);
        let b = RunManifest::new("verify", json!({"alpha": [0.5], "d": 1}), false);
        assert_eq!(a.config_hash, b.config_hash);
        assert!(a.timestamp.is_none());
    }
}
