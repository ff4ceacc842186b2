//! Corpus runner: every JSON file in a directory, analyzed under every
//! applicable selector, with a deterministic summary. File errors are
//! reported per file and never abort the batch.

use crate::checks::{run_all, CheckContext, CheckResult, CheckStatus};
use crate::io::{applicable_selectors, build_context, parse_input, InputFile, XSelector};
use crate::report::checks_json;
use crate::Caps;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

/// One (file, selector) evaluation.
pub struct CorpusEntry {
    pub file: String,
    pub selector: String,
    pub results: Vec<CheckResult>,
}

pub struct CorpusRun {
    pub entries: Vec<CorpusEntry>,
    /// `(file, message)` pairs for files that could not be processed.
    pub errors: Vec<(String, String)>,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

impl CorpusRun {
    pub fn failed(&self) -> bool {
        self.fail > 0
    }

    /// The report as canonical JSON (no timing fields).
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                json!({
                    "file": e.file,
                    "selector": e.selector,
                    "checks": checks_json(&e.results),
                })
            })
            .collect();
        let errors: Vec<Value> = self
            .errors
            .iter()
            .map(|(f, m)| json!({ "file": f, "error": m }))
            .collect();
        json!({
            "schema": "latspec/1",
            "entries": entries,
            "errors": errors,
            "summary": {
                "pass": self.pass,
                "fail": self.fail,
                "not_applicable": self.not_applicable,
                "files": self.entries.iter().map(|e| e.file.clone()).collect::<std::collections::BTreeSet<_>>().len(),
                "file_errors": self.errors.len(),
            },
        })
    }
}

/// Lists the corpus files of a directory, sorted by name.
pub fn corpus_files(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    files.sort();
    Ok(files)
}

/// Work for one parsed file: every applicable selector, in order.
fn run_file(
    name: &str,
    input: &InputFile,
    seed: u64,
    caps: &Caps,
) -> (Vec<CorpusEntry>, Vec<(String, String)>) {
    let mut entries = Vec::new();
    let mut errors = Vec::new();
    for selector in applicable_selectors(input) {
        match build_context(input, &selector, false, caps) {
            Ok(built) => {
                let cc = CheckContext::new(&built.ctx, seed).with_module_prime(built.module_prime);
                entries.push(CorpusEntry {
                    file: name.to_string(),
                    selector: built.descriptor,
                    results: run_all(&cc),
                });
            }
            Err(e) => errors.push((name.to_string(), format!("{}: {e}", selector.describe()))),
        }
    }
    (entries, errors)
}

/// Runs the corpus with the given worker count. Results are assembled in
/// file order regardless of scheduling.
pub fn run_corpus(dir: &Path, jobs: usize, seed: u64, caps: &Caps) -> std::io::Result<CorpusRun> {
    let files = corpus_files(dir)?;
    let jobs = jobs.max(1);

    struct Slot {
        entries: Vec<CorpusEntry>,
        errors: Vec<(String, String)>,
    }
    let slots: Vec<Mutex<Option<Slot>>> = files.iter().map(|_| Mutex::new(None)).collect();
    let next = std::sync::atomic::AtomicUsize::new(0);

    std::thread::scope(|scope| {
        for _ in 0..jobs.min(files.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if i >= files.len() {
                    break;
                }
                let path = &files[i];
                let name = path
                    .file_name()
                    .map(|n| n.to_string_lossy().into_owned())
                    .unwrap_or_else(|| path.display().to_string());
                let slot = match std::fs::read_to_string(path) {
                    Ok(text) => match parse_input(&text) {
                        Ok(input) => {
                            let (entries, errors) = run_file(&name, &input, seed, caps);
                            Slot { entries, errors }
                        }
                        Err(e) => Slot {
                            entries: Vec::new(),
                            errors: vec![(name.clone(), e.to_string())],
                        },
                    },
                    Err(e) => Slot {
                        entries: Vec::new(),
                        errors: vec![(name.clone(), e.to_string())],
                    },
                };
                *slots[i].lock().expect("slot lock") = Some(slot);
            });
        }
    });

    let mut run = CorpusRun {
        entries: Vec::new(),
        errors: Vec::new(),
        pass: 0,
        fail: 0,
        not_applicable: 0,
    };
    for slot in slots {
        let slot = slot.into_inner().expect("slot lock").expect("worker filled slot");
        for entry in slot.entries {
            for r in &entry.results {
                match r.status {
                    CheckStatus::Pass => run.pass += 1,
                    CheckStatus::Fail => run.fail += 1,
                    CheckStatus::NotApplicable => run.not_applicable += 1,
                }
            }
            run.entries.push(entry);
        }
        run.errors.extend(slot.errors);
    }
    Ok(run)
}

/// Runs a single already-parsed input, for `check` on one file.
pub fn run_single(
    input: &InputFile,
    selector: &XSelector,
    dual: bool,
    seed: u64,
    caps: &Caps,
) -> Result<Vec<CheckResult>, crate::io::IoError> {
    let built = build_context(input, selector, dual, caps)?;
    let cc = CheckContext::new(&built.ctx, seed).with_module_prime(built.module_prime);
    Ok(run_all(&cc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_corpus(dir: &Path) {
        std::fs::write(
            dir.join("z12.json"),
            r#"{ "schema": "latspec/1", "name": "z12", "modulus": 12, "invariant_factors": [12] }"#,
        )
        .unwrap();
        std::fs::write(
            dir.join("chain4.json"),
            r#"{ "schema": "latspec/1", "elements": ["0","a","b","1"], "covers": [[0,1],[1,2],[2,3]] }"#,
        )
        .unwrap();
    }

    #[test]
    fn corpus_runs_clean_and_ordered() {
        let dir = std::env::temp_dir().join(format!("latspec-corpus-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        write_corpus(&dir);
        let run = run_corpus(&dir, 2, 0, &Caps::default()).unwrap();
        assert!(!run.failed());
        assert!(run.errors.is_empty());
        // chain4 sorts before z12
        assert_eq!(run.entries.first().unwrap().file, "chain4.json");
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn empty_corpus_summarizes_to_success() {
        let dir = std::env::temp_dir().join(format!("latspec-empty-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let run = run_corpus(&dir, 1, 0, &Caps::default()).unwrap();
        assert!(!run.failed());
        assert!(run.entries.is_empty());
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn malformed_file_is_reported_without_aborting() {
        let dir = std::env::temp_dir().join(format!("latspec-bad-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        write_corpus(&dir);
        std::fs::write(dir.join("broken.json"), "{ not json").unwrap();
        let run = run_corpus(&dir, 2, 0, &Caps::default()).unwrap();
        assert_eq!(run.errors.len(), 1);
        assert!(run.errors[0].0.contains("broken"));
        assert!(!run.entries.is_empty());
        assert!(!run.failed());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
