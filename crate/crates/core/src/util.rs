//! Small shared helpers: atomic file writes, rounding, whole-word matching.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use tempfile::NamedTempFile;

/// Atomically replace `path`: the closure writes into a temp file in the
/// same directory, which is renamed over the destination on success.
pub fn atomic_write<F>(path: &Path, write_fn: F) -> io::Result<()>
where
    F: FnOnce(&mut BufWriter<&mut File>) -> io::Result<()>,
{
    let dir = parent_dir(path);
    let mut tmp = NamedTempFile::new_in(&dir)?;
    {
        let mut writer = BufWriter::new(tmp.as_file_mut());
        write_fn(&mut writer)?;
        writer.flush()?;
    }
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn parent_dir(path: &Path) -> PathBuf {
    match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    }
}

/// round_half_up(2.5) == 3, round_half_up(2.4) == 2. Used for every
/// "K% of N" selection count so manifests are reproducible.
pub fn round_half_up(x: f64) -> u64 {
    (x + 0.5).floor() as u64
}

/// Word characters for whole-word matching: alphanumerics plus underscore
/// (mirrors the usual regex `\b` semantics).
pub fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Case-insensitive whole-word occurrence test. `needle` may be a phrase
/// ("what if"); the match must not butt against word characters on either side.
pub fn contains_whole_word_ci(haystack: &str, needle: &str) -> bool {
    if needle.is_empty() {
        return false;
    }
    let hay = haystack.to_lowercase();
    let ndl = needle.to_lowercase();
    whole_word_positions(&hay, &ndl).next().is_some()
}

/// Count whole-word occurrences (case-insensitive).
pub fn count_whole_word_ci(haystack: &str, needle: &str) -> usize {
    if needle.is_empty() {
        return 0;
    }
    let hay = haystack.to_lowercase();
    let ndl = needle.to_lowercase();
    whole_word_positions(&hay, &ndl).count()
}

fn whole_word_positions<'a>(hay: &'a str, ndl: &'a str) -> impl Iterator<Item = usize> + 'a {
    hay.match_indices(ndl).filter_map(move |(pos, m)| {
        let before_ok = hay[..pos].chars().next_back().is_none_or(|c| !is_word_char(c));
        let after_ok = hay[pos + m.len()..].chars().next().is_none_or(|c| !is_word_char(c));
        (before_ok && after_ok).then_some(pos)
    })
}

/// The first `n` whitespace-delimited words of `text`, joined by single
/// spaces. Phrase keywords can then match across原 line breaks.
pub fn first_words_window(text: &str, n: usize) -> String {
    text.split_whitespace().take(n).collect::<Vec<_>>().join(" ")
}

/// Byte offset of every char boundary in `text`, plus the final length.
/// Lets callers slice by Unicode scalar offsets without repeated scans.
pub fn char_byte_offsets(text: &str) -> Vec<usize> {
    let mut offs: Vec<usize> = text.char_indices().map(|(b, _)| b).collect();
    offs.push(text.len());
    offs
}

/// Slice `text` by char (Unicode scalar) offsets. None if out of range.
pub fn char_slice<'a>(text: &'a str, start: usize, end: usize, offsets: &[usize]) -> Option<&'a str> {
    if start > end || end >= offsets.len() {
        return None;
    }
    Some(&text[offsets[start]..offsets[end]])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_half_up_boundaries() {
        assert_eq!(round_half_up(0.0), 0);
        assert_eq!(round_half_up(0.5), 1);
        assert_eq!(round_half_up(1.49), 1);
        assert_eq!(round_half_up(2.5), 3);
    }

    #[test]
    fn whole_word_matching() {
        assert!(contains_whole_word_ci("Perhaps x is 3", "perhaps"));
        assert!(contains_whole_word_ci("so, what if we try", "what if"));
        assert!(!contains_whole_word_ci("perhapsx", "perhaps"));
        assert!(!contains_whole_word_ci("a_perhaps b", "perhaps"));
        assert!(contains_whole_word_ci("double-check it", "check"));
        assert!(contains_whole_word_ci("Let's double-check it", "double-check"));
        assert_eq!(count_whole_word_ci("a b a, A.", "a"), 3);
    }

    #[test]
    fn words_window() {
        assert_eq!(first_words_window("a  b\nc d", 3), "a b c");
        assert_eq!(first_words_window("one", 12), "one");
    }

    #[test]
    fn char_slicing() {
        let text = "héllo";
        let offs = char_byte_offsets(text);
        assert_eq!(char_slice(text, 1, 3, &offs), Some("él"));
        assert_eq!(char_slice(text, 0, 5, &offs), Some("héllo"));
        assert_eq!(char_slice(text, 0, 6, &offs), None);
    }
}
