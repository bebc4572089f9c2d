//! Output encoding. Keys come out sorted because `serde_json::Map` is a
//! BTreeMap without the `preserve_order` feature.

use std::io;

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter, Serializer};
use serde_json::{json, Value};
use tqft_core::serial::{ComplexJson, RationalJson};
use tqft_core::{Rational64, C64};

/// Single line, `", "` between items and `": "` after keys.
struct Spaced;

impl Formatter for Spaced {
    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        w.write_all(b": ")
    }
}

pub fn render(v: &Value, pretty: bool) -> String {
    let mut out = Vec::new();
    if pretty {
        v.serialize(&mut Serializer::with_formatter(&mut out, PrettyFormatter::with_indent(b"  ")))
    } else {
        v.serialize(&mut Serializer::with_formatter(&mut out, Spaced))
    }
    .expect("serializing a Value into memory cannot fail");
    String::from_utf8(out).expect("serde_json writes UTF-8")
}

pub fn complex(z: C64) -> Value {
    json!(ComplexJson::from(z))
}

pub fn rational(r: Rational64) -> Value {
    json!(RationalJson::from(r))
}
