//! C ABI over the notascope library.
//!
//! A gallery is loaded into an opaque [`NsGallery`] handle and released
//! with [`ns_gallery_free`]. Every fallible function returns an
//! [`NsStatus`]; on failure [`ns_last_error_message`] describes the most
//! recent error on the calling thread. Results are written through out
//! pointers, and out pointers are left untouched on failure.
//!
//! Strings go in as NUL-terminated UTF-8. Strings come out through
//! caller-provided buffers: `required` always receives the size including
//! the terminating NUL, and `NS_STATUS_BUFFER_TOO_SMALL` is returned when
//! `capacity` is less than that.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;

use notascope::metrics::{self, CompressorConfig, MetricId};
use notascope::tokenizer::{TokenStream, TokenizerRegistry};
use notascope::{Error, Workbench};

/// Loaded gallery plus its distance configuration.
pub struct NsGallery {
    bench: Workbench,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NsStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    InvalidGallery = 3,
    Io = 4,
    UnknownNotation = 5,
    UnknownExample = 6,
    UnknownTokenizer = 7,
    DegenerateGallery = 8,
    CompressorUnavailable = 9,
    InvalidArgument = 10,
    LexError = 11,
    BufferTooSmall = 12,
    Internal = 13,
    Panic = 14,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NsMetric {
    /// Compression distance in bytes.
    Cd = 0,
    /// Levenshtein distance over non-comment lexemes.
    TokenLd = 1,
}

impl From<NsMetric> for MetricId {
    fn from(m: NsMetric) -> Self {
        match m {
            NsMetric::Cd => MetricId::Cd,
            NsMetric::TokenLd => MetricId::TokenLd,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: NsStatus,
    message: String,
}

impl Failure {
    fn new(status: NsStatus, message: impl Into<String>) -> Self {
        Self {
            status,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::UnknownNotation(_) => NsStatus::UnknownNotation,
            Error::UnknownExample(_) => NsStatus::UnknownExample,
            Error::UnknownTokenizer(_) => NsStatus::UnknownTokenizer,
            Error::UnknownMetric(_) | Error::InvalidArgument(_) => NsStatus::InvalidArgument,
            Error::DegenerateGallery(_) => NsStatus::DegenerateGallery,
            Error::CompressorUnavailable(_) => NsStatus::CompressorUnavailable,
            Error::Lex(_) => NsStatus::LexError,
            Error::Load(l) if !l.is_environmental() => NsStatus::InvalidGallery,
            _ if e.is_environmental() => NsStatus::Io,
            _ => NsStatus::Internal,
        };
        Failure::new(status, e.to_string())
    }
}

type FfiResult<T> = Result<T, Failure>;

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> FfiResult<()>) -> NsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NsStatus::Ok,
        Ok(Err(failure)) => {
            set_last_error(&failure.message);
            failure.status
        }
        Err(payload) => {
            let detail = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(&format!("panic: {detail}"));
            NsStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(ptr: *const c_char, name: &str) -> FfiResult<&'a str> {
    if ptr.is_null() {
        return Err(Failure::new(
            NsStatus::NullArgument,
            format!("`{name}` is null"),
        ));
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        Failure::new(
            NsStatus::InvalidUtf8,
            format!("`{name}` is not valid UTF-8"),
        )
    })
}

unsafe fn gallery_arg<'a>(ptr: *const NsGallery) -> FfiResult<&'a NsGallery> {
    ptr.as_ref()
        .ok_or_else(|| Failure::new(NsStatus::NullArgument, "`gallery` is null"))
}

unsafe fn out_arg<'a, T>(ptr: *mut T, name: &str) -> FfiResult<&'a mut T> {
    ptr.as_mut()
        .ok_or_else(|| Failure::new(NsStatus::NullArgument, format!("`{name}` is null")))
}

unsafe fn compressor_arg(ptr: *const c_char) -> FfiResult<CompressorConfig> {
    let config = if ptr.is_null() {
        CompressorConfig::default()
    } else {
        str_arg(ptr, "compressor")?.parse()?
    };
    config.check_available()?;
    Ok(config)
}

unsafe fn write_string(
    text: &str,
    buf: *mut c_char,
    capacity: usize,
    required: *mut usize,
) -> FfiResult<()> {
    let needed = text.len() + 1;
    if let Some(r) = required.as_mut() {
        *r = needed;
    }
    if capacity < needed {
        return Err(Failure::new(
            NsStatus::BufferTooSmall,
            format!("buffer holds {capacity} bytes, {needed} required"),
        ));
    }
    if buf.is_null() {
        return Err(Failure::new(NsStatus::NullArgument, "`buf` is null"));
    }
    std::ptr::copy_nonoverlapping(text.as_ptr(), buf.cast::<u8>(), text.len());
    *buf.add(text.len()) = 0;
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ns_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null if none.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ns_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |c| c.as_ptr())
    })
}

/// Loads the gallery at `root`. `compressor` is `algorithm[:level]` or
/// null for the default `zlib:9`.
///
/// # Safety
/// `root` and `compressor` must be null or NUL-terminated strings;
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ns_gallery_load(
    root: *const c_char,
    compressor: *const c_char,
    out: *mut *mut NsGallery,
) -> NsStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let root = str_arg(root, "root")?;
        let compressor = compressor_arg(compressor)?;
        let gallery = notascope::load_gallery(Path::new(root)).map_err(Error::from)?;
        let handle = Box::new(NsGallery {
            bench: Workbench::new(gallery, compressor),
        });
        *out = Box::into_raw(handle);
        Ok(())
    })
}

/// Releases a handle from [`ns_gallery_load`]. Null is ignored.
///
/// # Safety
/// `gallery` must be null or a live handle; it must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ns_gallery_free(gallery: *mut NsGallery) {
    if !gallery.is_null() {
        drop(Box::from_raw(gallery));
    }
}

/// # Safety
/// `gallery` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ns_gallery_notation_count(
    gallery: *const NsGallery,
    out: *mut usize,
) -> NsStatus {
    guard(|| {
        let g = gallery_arg(gallery)?;
        *out_arg(out, "out")? = g.bench.gallery().notations().len();
        Ok(())
    })
}

/// # Safety
/// `gallery` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ns_gallery_example_count(
    gallery: *const NsGallery,
    out: *mut usize,
) -> NsStatus {
    guard(|| {
        let g = gallery_arg(gallery)?;
        *out_arg(out, "out")? = g.bench.gallery().examples().len();
        Ok(())
    })
}

/// Copies the id of notation `index` (in gallery.json order) into `buf`.
///
/// # Safety
/// `gallery` must be a live handle, `buf` valid for `capacity` bytes, and
/// `required` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ns_gallery_notation_id(
    gallery: *const NsGallery,
    index: usize,
    buf: *mut c_char,
    capacity: usize,
    required: *mut usize,
) -> NsStatus {
    guard(|| {
        let g = gallery_arg(gallery)?;
        let notation = g.bench.gallery().notations().get(index).ok_or_else(|| {
            Failure::new(
                NsStatus::InvalidArgument,
                format!("notation index {index} out of range"),
            )
        })?;
        write_string(&notation.id, buf, capacity, required)
    })
}

/// Copies the id of example `index` (canonical order) into `buf`.
///
/// # Safety
/// As for [`ns_gallery_notation_id`].
#[no_mangle]
pub unsafe extern "C" fn ns_gallery_example_id(
    gallery: *const NsGallery,
    index: usize,
    buf: *mut c_char,
    capacity: usize,
    required: *mut usize,
) -> NsStatus {
    guard(|| {
        let g = gallery_arg(gallery)?;
        let example = g.bench.gallery().examples().get(index).ok_or_else(|| {
            Failure::new(
                NsStatus::InvalidArgument,
                format!("example index {index} out of range"),
            )
        })?;
        write_string(example, buf, capacity, required)
    })
}

/// Copies the 64-character hex content hash into `buf`.
///
/// # Safety
/// As for [`ns_gallery_notation_id`].
#[no_mangle]
pub unsafe extern "C" fn ns_gallery_content_hash(
    gallery: *const NsGallery,
    buf: *mut c_char,
    capacity: usize,
    required: *mut usize,
) -> NsStatus {
    guard(|| {
        let g = gallery_arg(gallery)?;
        write_string(g.bench.gallery().content_hash(), buf, capacity, required)
    })
}

/// Median normalized byte length of the notation's specs.
///
/// # Safety
/// `gallery` must be a live handle, `notation` a NUL-terminated string and
/// `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ns_median_spec_length(
    gallery: *const NsGallery,
    notation: *const c_char,
    out: *mut f64,
) -> NsStatus {
    guard(|| {
        let g = gallery_arg(gallery)?;
        let notation = str_arg(notation, "notation")?;
        let out = out_arg(out, "out")?;
        *out = metrics::median_spec_length(g.bench.gallery(), notation)?;
        Ok(())
    })
}

/// Distinct non-comment lexemes across the notation's specs.
///
/// # Safety
/// As for [`ns_median_spec_length`].
#[no_mangle]
pub unsafe extern "C" fn ns_vocabulary_size(
    gallery: *const NsGallery,
    notation: *const c_char,
    out: *mut usize,
) -> NsStatus {
    guard(|| {
        let g = gallery_arg(gallery)?;
        let notation = str_arg(notation, "notation")?;
        let out = out_arg(out, "out")?;
        *out = notascope::tokenizer::vocabulary(g.bench.gallery(), notation)?.unique_count;
        Ok(())
    })
}

/// Median pairwise distance between the notation's specs.
///
/// # Safety
/// As for [`ns_median_spec_length`].
#[no_mangle]
pub unsafe extern "C" fn ns_sprawl(
    gallery: *const NsGallery,
    notation: *const c_char,
    metric: NsMetric,
    out: *mut f64,
) -> NsStatus {
    guard(|| {
        let g = gallery_arg(gallery)?;
        let notation = str_arg(notation, "notation")?;
        let out = out_arg(out, "out")?;
        let matrix = g.bench.matrix(notation, metric.into())?;
        *out = metrics::sprawl(&matrix)?;
        Ok(())
    })
}

/// Median distance from one example to the notation's other examples.
///
/// # Safety
/// As for [`ns_median_spec_length`]; `example` must be a NUL-terminated
/// string.
#[no_mangle]
pub unsafe extern "C" fn ns_remoteness(
    gallery: *const NsGallery,
    notation: *const c_char,
    example: *const c_char,
    metric: NsMetric,
    out: *mut f64,
) -> NsStatus {
    guard(|| {
        let g = gallery_arg(gallery)?;
        let notation = str_arg(notation, "notation")?;
        let example = str_arg(example, "example")?;
        let out = out_arg(out, "out")?;
        let matrix = g.bench.matrix(notation, metric.into())?;
        let index = g.bench.gallery().example_index(example)?;
        *out = metrics::remoteness(&matrix, index)?;
        Ok(())
    })
}

/// Writes the n×n distance matrix row-major into `values`, rows and
/// columns in canonical example order. `n` always receives the example
/// count; `NS_STATUS_BUFFER_TOO_SMALL` is returned if `capacity < n * n`.
///
/// # Safety
/// `gallery` must be a live handle, `notation` a NUL-terminated string,
/// `values` valid for `capacity` writes, and `n` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ns_distance_matrix(
    gallery: *const NsGallery,
    notation: *const c_char,
    metric: NsMetric,
    values: *mut f64,
    capacity: usize,
    n: *mut usize,
) -> NsStatus {
    guard(|| {
        let g = gallery_arg(gallery)?;
        let notation = str_arg(notation, "notation")?;
        let n = out_arg(n, "n")?;
        let matrix = g.bench.matrix(notation, metric.into())?;
        let size = matrix.n();
        *n = size;
        if capacity < size * size {
            return Err(Failure::new(
                NsStatus::BufferTooSmall,
                format!("buffer holds {capacity} values, {} required", size * size),
            ));
        }
        if values.is_null() {
            return Err(Failure::new(NsStatus::NullArgument, "`values` is null"));
        }
        let out = std::slice::from_raw_parts_mut(values, size * size);
        for (i, row) in matrix.values.iter().enumerate() {
            out[i * size..(i + 1) * size].copy_from_slice(row);
        }
        Ok(())
    })
}

/// Compression distance between two byte strings, `a` concatenated first.
///
/// # Safety
/// `a` and `b` must be valid for `a_len` and `b_len` reads (either may be
/// null when its length is 0); `compressor` as in [`ns_gallery_load`];
/// `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ns_compression_distance(
    a: *const u8,
    a_len: usize,
    b: *const u8,
    b_len: usize,
    compressor: *const c_char,
    out: *mut f64,
) -> NsStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let a = bytes_arg(a, a_len, "a")?;
        let b = bytes_arg(b, b_len, "b")?;
        let compressor = compressor_arg(compressor)?;
        *out = metrics::compression_distance(a, b, &compressor)?;
        Ok(())
    })
}

unsafe fn bytes_arg<'a>(ptr: *const u8, len: usize, name: &str) -> FfiResult<&'a [u8]> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(Failure::new(
            NsStatus::NullArgument,
            format!("`{name}` is null"),
        ));
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

/// Token edit distance between two texts under a built-in tokenizer
/// (`generic`, `json`, `python`, `r`, `javascript`).
///
/// # Safety
/// `tokenizer`, `a` and `b` must be NUL-terminated strings and `out` valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn ns_token_levenshtein(
    tokenizer: *const c_char,
    a: *const c_char,
    b: *const c_char,
    out: *mut usize,
) -> NsStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let tokenizer = str_arg(tokenizer, "tokenizer")?;
        let a = str_arg(a, "a")?;
        let b = str_arg(b, "b")?;
        let registry = TokenizerRegistry::builtin();
        if !registry.contains(tokenizer) {
            return Err(Error::UnknownTokenizer(tokenizer.to_string()).into());
        }
        let stream = |text: &str| -> FfiResult<TokenStream> {
            Ok(TokenStream {
                notation_id: String::new(),
                example_id: String::new(),
                tokens: registry.tokenize(tokenizer, text).map_err(Error::from)?,
            })
        };
        *out = metrics::token_levenshtein(&stream(a)?, &stream(b)?);
        Ok(())
    })
}
