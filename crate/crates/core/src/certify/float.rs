//! Floats in certificates: shortest round-trip decimal plus hex-float.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct F64(pub f64);

pub fn to_hex(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    let sign = if x.is_sign_negative() { "-" } else { "" };
    if x.is_infinite() {
        return format!("{sign}inf");
    }
    let bits = x.to_bits();
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let man = bits & ((1u64 << 52) - 1);
    if exp == 0 && man == 0 {
        return format!("{sign}0x0p+0");
    }
    let (lead, e) = if exp == 0 { (0, -1022) } else { (1, exp - 1023) };
    let digits = format!("{man:013x}");
    let digits = digits.trim_end_matches('0');
    if digits.is_empty() {
        format!("{sign}0x{lead}p{e:+}")
    } else {
        format!("{sign}0x{lead}.{digits}p{e:+}")
    }
}

pub fn from_hex(s: &str) -> Option<f64> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let v = match body {
        "inf" => f64::INFINITY,
        "nan" => f64::NAN,
        _ => {
            let body = body.strip_prefix("0x")?;
            let (mant, exp) = body.split_once('p')?;
            let exp: i32 = exp.parse().ok()?;
            let (lead, frac) = mant.split_once('.').unwrap_or((mant, ""));
            if frac.len() > 13 || !(lead == "0" || lead == "1") {
                return None;
            }
            let frac_bits = if frac.is_empty() { 0 } else { u64::from_str_radix(frac, 16).ok()? << (4 * (13 - frac.len())) };
            let lead: u64 = lead.parse().ok()?;
            // exact: 53 significant bits scaled by a power of two
            let m = ((lead << 52) | frac_bits) as f64;
            ldexp(m, exp - 52)
        }
    };
    Some(if neg { -v } else { v })
}

fn ldexp(mut m: f64, mut e: i32) -> f64 {
    while e < -1000 {
        m *= 2f64.powi(-1000);
        e += 1000;
    }
    while e > 1000 {
        m *= 2f64.powi(1000);
        e -= 1000;
    }
    m * 2f64.powi(e)
}

impl Serialize for F64 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("F64", 2)?;
        st.serialize_field("dec", &format!("{:?}", self.0))?;
        st.serialize_field("hex", &to_hex(self.0))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for F64 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            dec: String,
            hex: String,
        }
        let raw = Raw::deserialize(d)?;
        let h = from_hex(&raw.hex).ok_or_else(|| D::Error::custom(format!("bad hex float `{}`", raw.hex)))?;
        let v: f64 = raw.dec.parse().map_err(|_| D::Error::custom(format!("bad decimal `{}`", raw.dec)))?;
        if v.to_bits() != h.to_bits() && !(v.is_nan() && h.is_nan()) {
            return Err(D::Error::custom(format!("decimal {} and hex {} disagree", raw.dec, raw.hex)));
        }
        Ok(F64(h))
    }
}
