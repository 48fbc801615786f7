//! Conversions among 8-bit RGB, HSV, and Lab pixel encodings.
//!
//! The 8-bit scales follow the common computer-vision convention: hue is
//! stored as degrees/2 in `[0, 180)`, saturation and value in `[0, 255]`,
//! and Lab is encoded as `L' = L* * 255/100`, `a' = a* + 128`,
//! `b' = b* + 128`. Lab assumes sRGB gamma and the D65 white point; the
//! final 8-bit encode always rounds half away from zero.
//!
//! Every conversion is exposed twice: a floating-point form that carries
//! full precision in the 8-bit scales, and a quantized [`Pixel8`] form.
//! Quantizing hue to integers costs up to ~1 degree, so a round trip that
//! passes through a `Pixel8` HSV value can move a saturated channel by a
//! few counts; chains that need the tighter bound should compose the
//! float forms and quantize once at the end.

use serde::{Deserialize, Serialize};

/// One 8-bit, 3-channel pixel. Channel meaning depends on the color space
/// the containing image is tagged with.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Pixel8(pub [u8; 3]);

impl Pixel8 {
    pub fn new(c0: u8, c1: u8, c2: u8) -> Self {
        Pixel8([c0, c1, c2])
    }

    pub fn channels(&self) -> [u8; 3] {
        self.0
    }

    /// Channelwise `lo <= self <= hi`.
    pub fn in_range(&self, lo: Pixel8, hi: Pixel8) -> bool {
        (0..3).all(|i| self.0[i] >= lo.0[i] && self.0[i] <= hi.0[i])
    }

    pub fn as_f64(&self) -> [f64; 3] {
        [self.0[0] as f64, self.0[1] as f64, self.0[2] as f64]
    }
}

/// Color space an image's pixel data is expressed in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColorSpaceTag {
    Rgb,
    Hsv,
    Lab,
}

impl std::fmt::Display for ColorSpaceTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ColorSpaceTag::Rgb => write!(f, "RGB"),
            ColorSpaceTag::Hsv => write!(f, "HSV"),
            ColorSpaceTag::Lab => write!(f, "Lab"),
        }
    }
}

/// Rounds half away from zero and saturates to `[0, 255]`.
///
/// This is the single 8-bit encode rule used by every conversion here.
pub fn quantize(v: f64) -> u8 {
    let r = if v >= 0.0 { (v + 0.5).floor() } else { (v - 0.5).ceil() };
    r.clamp(0.0, 255.0) as u8
}

fn quantize3(c: [f64; 3]) -> Pixel8 {
    Pixel8([quantize(c[0]), quantize(c[1]), quantize(c[2])])
}

/// RGB (each channel in `[0, 255]`) to HSV in the 8-bit scales
/// (`h` in `[0, 180)`, `s` and `v` in `[0, 255]`), full precision.
pub fn rgb_to_hsv_f64(rgb: [f64; 3]) -> [f64; 3] {
    let [r, g, b] = rgb;
    let max = r.max(g).max(b);
    let min = r.min(g).min(b);
    let diff = max - min;

    let s = if max > 0.0 { diff / max * 255.0 } else { 0.0 };
    let mut h_deg = if diff > 0.0 {
        if max == r {
            60.0 * (g - b) / diff
        } else if max == g {
            120.0 + 60.0 * (b - r) / diff
        } else {
            240.0 + 60.0 * (r - g) / diff
        }
    } else {
        0.0
    };
    if h_deg < 0.0 {
        h_deg += 360.0;
    }
    // Red sits at the 0/360 discontinuity; both ends map to 0.
    if h_deg >= 360.0 {
        h_deg = 0.0;
    }
    [h_deg / 2.0, s, max]
}

/// Inverse of [`rgb_to_hsv_f64`] on the same 8-bit scales.
pub fn hsv_to_rgb_f64(hsv: [f64; 3]) -> [f64; 3] {
    let [h, s8, v8] = hsv;
    let s = s8 / 255.0;
    let v = v8;
    let h_deg = (h * 2.0).rem_euclid(360.0);
    let sector = (h_deg / 60.0).floor();
    let f = h_deg / 60.0 - sector;
    let p = v * (1.0 - s);
    let q = v * (1.0 - s * f);
    let t = v * (1.0 - s * (1.0 - f));
    match sector as u32 % 6 {
        0 => [v, t, p],
        1 => [q, v, p],
        2 => [p, v, t],
        3 => [p, q, v],
        4 => [t, p, v],
        _ => [v, p, q],
    }
}

// sRGB <-> linear, channel in [0, 1].
fn srgb_to_linear(c: f64) -> f64 {
    if c <= 0.04045 {
        c / 12.92
    } else {
        ((c + 0.055) / 1.055).powf(2.4)
    }
}

fn linear_to_srgb(c: f64) -> f64 {
    if c <= 0.0031308 {
        c * 12.92
    } else {
        1.055 * c.powf(1.0 / 2.4) - 0.055
    }
}

// D65 reference white in the sRGB-derived XYZ basis.
const XN: f64 = 0.950456;
const YN: f64 = 1.0;
const ZN: f64 = 1.088754;

const LAB_EPS: f64 = 0.008856; // (6/29)^3
const LAB_KAPPA: f64 = 903.3; // 29^3 / 3^3, CIE standard value

fn lab_f(t: f64) -> f64 {
    if t > LAB_EPS {
        t.cbrt()
    } else {
        (LAB_KAPPA * t + 16.0) / 116.0
    }
}

fn lab_f_inv(t: f64) -> f64 {
    let t3 = t * t * t;
    if t3 > LAB_EPS {
        t3
    } else {
        (116.0 * t - 16.0) / LAB_KAPPA
    }
}

/// RGB (`[0, 255]` per channel) to Lab in the 8-bit offset encoding
/// (`L'` in `[0, 255]`, `a'` and `b'` centered on 128), full precision.
pub fn rgb_to_lab_f64(rgb: [f64; 3]) -> [f64; 3] {
    let r = srgb_to_linear(rgb[0] / 255.0);
    let g = srgb_to_linear(rgb[1] / 255.0);
    let b = srgb_to_linear(rgb[2] / 255.0);

    let x = 0.412453 * r + 0.357580 * g + 0.180423 * b;
    let y = 0.212671 * r + 0.715160 * g + 0.072169 * b;
    let z = 0.019334 * r + 0.119193 * g + 0.950227 * b;

    let fx = lab_f(x / XN);
    let fy = lab_f(y / YN);
    let fz = lab_f(z / ZN);

    let l_star = 116.0 * fy - 16.0;
    let a_star = 500.0 * (fx - fy);
    let b_star = 200.0 * (fy - fz);

    [l_star * 255.0 / 100.0, a_star + 128.0, b_star + 128.0]
}

/// Inverse of [`rgb_to_lab_f64`]; out-of-gamut results are clamped to
/// `[0, 255]` per channel.
pub fn lab_to_rgb_f64(lab: [f64; 3]) -> [f64; 3] {
    let l_star = lab[0] * 100.0 / 255.0;
    let a_star = lab[1] - 128.0;
    let b_star = lab[2] - 128.0;

    let fy = (l_star + 16.0) / 116.0;
    let fx = fy + a_star / 500.0;
    let fz = fy - b_star / 200.0;

    let x = lab_f_inv(fx) * XN;
    let y = if l_star > LAB_EPS * LAB_KAPPA {
        let t = (l_star + 16.0) / 116.0;
        t * t * t
    } else {
        l_star / LAB_KAPPA
    } * YN;
    let z = lab_f_inv(fz) * ZN;

    let r = 3.240479 * x - 1.537150 * y - 0.498535 * z;
    let g = -0.969256 * x + 1.875992 * y + 0.041556 * z;
    let b = 0.055648 * x - 0.204043 * y + 1.057311 * z;

    [
        (linear_to_srgb(r.clamp(0.0, 1.0)) * 255.0).clamp(0.0, 255.0),
        (linear_to_srgb(g.clamp(0.0, 1.0)) * 255.0).clamp(0.0, 255.0),
        (linear_to_srgb(b.clamp(0.0, 1.0)) * 255.0).clamp(0.0, 255.0),
    ]
}

/// Quantized RGB -> HSV. Achromatic inputs yield `h = 0`, `s = 0`.
pub fn rgb_to_hsv(p: Pixel8) -> Pixel8 {
    let hsv = rgb_to_hsv_f64(p.as_f64());
    let mut out = quantize3(hsv);
    // 359.x degrees can round up to the wrap point; it is red either way.
    if out.0[0] >= 180 {
        out.0[0] = 0;
    }
    out
}

/// Quantized HSV -> RGB.
pub fn hsv_to_rgb(p: Pixel8) -> Pixel8 {
    quantize3(hsv_to_rgb_f64(p.as_f64()))
}

/// Quantized RGB -> Lab.
pub fn rgb_to_lab(p: Pixel8) -> Pixel8 {
    quantize3(rgb_to_lab_f64(p.as_f64()))
}

/// Quantized Lab -> RGB.
pub fn lab_to_rgb(p: Pixel8) -> Pixel8 {
    quantize3(lab_to_rgb_f64(p.as_f64()))
}
