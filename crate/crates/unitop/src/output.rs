use std::io::Write;
use std::path::{Path, PathBuf};

use crate::AppError;

/// Fails early when `path` could not be created, before any computation.
pub fn check_writable(path: &Path) -> Result<(), AppError> {
    let dir = parent_dir(path);
    if !dir.is_dir() {
        return Err(AppError::Io(format!(
            "{}: directory {} does not exist",
            path.display(),
            dir.display()
        )));
    }
    if path.is_dir() {
        return Err(AppError::Io(format!("{} is a directory", path.display())));
    }
    Ok(())
}

fn parent_dir(path: &Path) -> PathBuf {
    match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    }
}

/// Writes through a temporary file in the same directory and renames it
/// into place, so a failed run never leaves a partial file behind.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), AppError> {
    write_all_atomic(&[(path.to_path_buf(), bytes.to_vec())])
}

/// Several outputs, all or nothing: every file is staged first and the
/// renames happen only once all contents are written.
pub fn write_all_atomic(files: &[(PathBuf, Vec<u8>)]) -> Result<(), AppError> {
    let mut staged = Vec::with_capacity(files.len());
    for (path, bytes) in files {
        let dir = parent_dir(path);
        let mut tmp = tempfile::NamedTempFile::new_in(&dir)
            .map_err(|e| AppError::io(format!("creating temporary file in {}", dir.display()), e))?;
        tmp.write_all(bytes)
            .and_then(|_| tmp.flush())
            .map_err(|e| AppError::io(path.display(), e))?;
        staged.push((tmp, path));
    }
    for (tmp, path) in staged {
        tmp.persist(path)
            .map_err(|e| AppError::io(path.display(), e.error))?;
    }
    Ok(())
}

pub fn read_input(path: &Path) -> Result<String, AppError> {
    std::fs::read_to_string(path).map_err(|e| AppError::io(path.display(), e))
}
