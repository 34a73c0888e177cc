//! Binary index file.
//!
//! ```text
//! "BQAX" u8:version
//! u32 n_sentences  { u32 id, str text, str category, u8 sense, u32 n_tokens { str surface, u8 tag } }
//! u32 n_postings   { str surface, u32 n { u32 id } }
//! u32 n_freq       { str surface, u64 count }
//! u64 total_tokens
//! ```
//!
//! Integers are little-endian, `str` is a u32 byte length followed by UTF-8,
//! `sense` is 0 for none or 1 + class index, `tag` is the [`PosTag`] index.
//! Every map is written in ascending key order, so equal indexes serialize
//! to identical bytes.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use super::{CorpusIndex, Sentence};
use crate::error::{Error, Result};
use crate::sense_class::SenseClass;
use crate::text::{PosTag, Token};

pub const MAGIC: &[u8; 4] = b"BQAX";
pub const VERSION: u8 = 1;

pub fn save_index(index: &CorpusIndex, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, encode(index)).map_err(|e| Error::io(path, e))
}

pub fn load_index(path: impl AsRef<Path>) -> Result<CorpusIndex> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    decode(&bytes)
}

pub fn encode(index: &CorpusIndex) -> Vec<u8> {
    let mut w = Writer::default();
    w.buf.extend_from_slice(MAGIC);
    w.buf.push(VERSION);

    w.len(index.len());
    for s in index.sentences() {
        w.u32(s.id);
        w.str(&s.text);
        w.str(&s.category);
        w.buf.push(s.gold_sense.map_or(0, |c| c.index() as u8 + 1));
        w.len(s.tokens.len());
        for t in &s.tokens {
            w.str(&t.surface);
            w.buf.push(t.tag as u8);
        }
    }

    w.len(index.inverted().len());
    for (surface, ids) in index.inverted() {
        w.str(surface);
        w.len(ids.len());
        for id in ids {
            w.u32(*id);
        }
    }

    w.len(index.freq().len());
    for (surface, n) in index.freq() {
        w.str(surface);
        w.u64(*n);
    }
    w.u64(index.total_tokens());
    w.buf
}

pub fn decode(bytes: &[u8]) -> Result<CorpusIndex> {
    let mut r = Reader { bytes, pos: 0 };
    if r.take(4)? != MAGIC {
        return Err(Error::IndexFormat("bad magic".into()));
    }
    let version = r.u8()?;
    if version != VERSION {
        return Err(Error::IndexFormat(format!("unsupported version {version}")));
    }

    let mut sentences = BTreeMap::new();
    for _ in 0..r.u32()? {
        let id = r.u32()?;
        let text = r.str()?;
        let category = r.str()?;
        let gold_sense = match r.u8()? {
            0 => None,
            n => Some(
                SenseClass::from_index(n as usize - 1)
                    .ok_or_else(|| Error::IndexFormat(format!("bad sense code {n}")))?,
            ),
        };
        let n_tokens = r.u32()?;
        let mut tokens = Vec::new();
        for _ in 0..n_tokens {
            let surface = r.str()?;
            let code = r.u8()?;
            let tag = *PosTag::ALL
                .get(code as usize)
                .ok_or_else(|| Error::IndexFormat(format!("bad tag code {code}")))?;
            tokens.push(Token::new(surface, tag));
        }
        let s = Sentence {
            id,
            text,
            tokens,
            category,
            gold_sense,
        };
        if sentences.insert(id, s).is_some() {
            return Err(Error::IndexFormat(format!("duplicate sentence id {id}")));
        }
    }

    let mut inverted = BTreeMap::new();
    for _ in 0..r.u32()? {
        let surface = r.str()?;
        let n = r.u32()?;
        let ids = (0..n).map(|_| r.u32()).collect::<Result<Vec<_>>>()?;
        inverted.insert(surface, ids);
    }

    let mut freq = BTreeMap::new();
    for _ in 0..r.u32()? {
        let surface = r.str()?;
        freq.insert(surface, r.u64()?);
    }
    let total_tokens = r.u64()?;
    if r.pos != bytes.len() {
        return Err(Error::IndexFormat("trailing bytes".into()));
    }

    let loaded = CorpusIndex::from_parts(sentences, inverted, freq, total_tokens);
    // derived tables must agree with the sentences they were built from
    let rebuilt = CorpusIndex::build(loaded.sentences().cloned())?;
    if rebuilt != loaded {
        return Err(Error::IndexFormat(
            "inconsistent postings or frequencies".into(),
        ));
    }
    Ok(loaded)
}

#[derive(Default)]
struct Writer {
    buf: Vec<u8>,
}

impl Writer {
    fn u32(&mut self, v: u32) {
        self.buf.extend_from_slice(&v.to_le_bytes());
    }

    fn u64(&mut self, v: u64) {
        self.buf.extend_from_slice(&v.to_le_bytes());
    }

    fn len(&mut self, n: usize) {
        self.u32(u32::try_from(n).expect("collection too large for index format"));
    }

    fn str(&mut self, s: &str) {
        self.len(s.len());
        self.buf.extend_from_slice(s.as_bytes());
    }
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        let end = self
            .pos
            .checked_add(n)
            .filter(|&end| end <= self.bytes.len())
            .ok_or_else(|| Error::IndexFormat("truncated file".into()))?;
        let out = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(out)
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn str(&mut self) -> Result<String> {
        let n = self.u32()? as usize;
        let raw = self.take(n)?;
        String::from_utf8(raw.to_vec()).map_err(|_| Error::IndexFormat("invalid UTF-8".into()))
    }
}
