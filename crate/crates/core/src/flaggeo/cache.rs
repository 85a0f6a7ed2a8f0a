use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use super::{FiberCountRecord, FlagError};
use crate::combinatorics::{DimVector, Partition};

type Key = (Partition, DimVector, u64);

/// Append-only JSONL store of fiber counts, one [`FiberCountRecord`] per
/// line. A missing file reads as empty; unparsable or inconsistent lines are
/// skipped and counted.
pub struct CountCache {
    path: PathBuf,
    entries: Mutex<HashMap<Key, u64>>,
    writer: Mutex<Option<File>>,
    skipped: usize,
}

impl CountCache {
    pub fn open(path: impl AsRef<Path>) -> Result<Self, FlagError> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        let mut skipped = 0;
        match File::open(&path) {
            Ok(file) => {
                for line in BufReader::new(file).lines() {
                    let line = line.map_err(|e| FlagError::Cache(e.to_string()))?;
                    if line.trim().is_empty() {
                        continue;
                    }
                    match serde_json::from_str::<FiberCountRecord>(&line) {
                        Ok(r) if r.lambda.size() == r.dimvec.total() => {
                            entries.insert((r.lambda, r.dimvec, r.q), r.count);
                        }
                        _ => skipped += 1,
                    }
                }
            }
            Err(e) if e.kind() == ErrorKind::NotFound => {}
            Err(e) => return Err(FlagError::Cache(e.to_string())),
        }
        Ok(CountCache {
            path,
            entries: Mutex::new(entries),
            writer: Mutex::new(None),
            skipped,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Lines ignored while loading.
    pub fn skipped_lines(&self) -> usize {
        self.skipped
    }

    pub fn get(&self, lambda: &Partition, dimvec: &DimVector, q: u64) -> Option<u64> {
        let key = (lambda.clone(), dimvec.clone(), q);
        self.entries
            .lock()
            .expect("cache poisoned")
            .get(&key)
            .copied()
    }

    /// Stores a record, appending it to the file if it is new. Each record is
    /// written with a single `write_all` of the whole line in append mode.
    pub fn insert(&self, record: &FiberCountRecord) -> Result<(), FlagError> {
        let key = (record.lambda.clone(), record.dimvec.clone(), record.q);
        {
            let mut entries = self.entries.lock().expect("cache poisoned");
            if let Some(&old) = entries.get(&key) {
                if old != record.count {
                    return Err(FlagError::Cache(format!(
                        "conflicting counts {old} and {} for {:?}",
                        record.count, key
                    )));
                }
                return Ok(());
            }
            entries.insert(key, record.count);
        }
        let mut line =
            serde_json::to_string(record).map_err(|e| FlagError::Cache(e.to_string()))?;
        line.push('\n');
        let mut writer = self.writer.lock().expect("cache poisoned");
        if writer.is_none() {
            let file = OpenOptions::new()
                .create(true)
                .append(true)
                .open(&self.path)
                .map_err(|e| FlagError::Cache(e.to_string()))?;
            *writer = Some(file);
        }
        writer
            .as_mut()
            .expect("writer opened above")
            .write_all(line.as_bytes())
            .map_err(|e| FlagError::Cache(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(l: &str, v: &str, q: u64, count: u64) -> FiberCountRecord {
        FiberCountRecord {
            lambda: l.parse().unwrap(),
            dimvec: v.parse().unwrap(),
            q,
            count,
        }
    }

    #[test]
    fn record_line_format() {
        let line = serde_json::to_string(&rec("2,1", "1,1,1", 5, 11)).unwrap();
        assert_eq!(
            line,
            r#"{"lambda":[2,1],"dimvec":[1,1,1],"q":5,"count":11}"#
        );
    }

    #[test]
    fn missing_file_reads_empty_and_persists() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("counts.jsonl");
        let cache = CountCache::open(&path).unwrap();
        assert!(cache.is_empty());
        cache.insert(&rec("2,1", "1,1,1", 5, 11)).unwrap();
        cache.insert(&rec("2,1", "1,1,1", 5, 11)).unwrap();
        assert!(cache.insert(&rec("2,1", "1,1,1", 5, 12)).is_err());
        drop(cache);

        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 1);
        let again = CountCache::open(&path).unwrap();
        assert_eq!(
            again.get(&"2,1".parse().unwrap(), &"1,1,1".parse().unwrap(), 5),
            Some(11)
        );
    }

    #[test]
    fn bad_lines_are_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("counts.jsonl");
        std::fs::write(
            &path,
            "not json\n{\"lambda\":[2],\"dimvec\":[1,1,1],\"q\":2,\"count\":1}\n\n{\"lambda\":[1,1],\"dimvec\":[1,1],\"q\":3,\"count\":4}\n",
        )
        .unwrap();
        let cache = CountCache::open(&path).unwrap();
        assert_eq!(cache.len(), 1);
        assert_eq!(cache.skipped_lines(), 2);
    }
}
