//! Channelwise range masks and dynamic HSV bound estimation.

use serde::{Deserialize, Serialize};

use super::KernelError;
use crate::color::{ColorSpaceTag, Pixel8};
use crate::raster::{Image, Mask};

/// Inclusive HSV bounds in the 8-bit scales (`h` in `[0, 180]`,
/// `s`/`v` in `[0, 255]`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HsvBounds {
    pub lo: Pixel8,
    pub hi: Pixel8,
}

impl HsvBounds {
    pub fn new(lo: Pixel8, hi: Pixel8) -> Result<Self, KernelError> {
        if (0..3).any(|i| lo.0[i] > hi.0[i]) {
            return Err(KernelError::BadBounds);
        }
        Ok(HsvBounds { lo, hi })
    }

    pub fn contains(&self, p: Pixel8) -> bool {
        p.in_range(self.lo, self.hi)
    }
}

/// Marks pixels whose HSV channels all fall inside `bounds`.
pub fn hsv_range_mask(img: &Image, bounds: HsvBounds) -> Result<Mask, KernelError> {
    img.expect_space(ColorSpaceTag::Hsv)?;
    let bits = img.pixels().iter().map(|&p| bounds.contains(p)).collect();
    Ok(Mask::from_bits(img.width(), img.height(), bits)?)
}

/// Per-channel percentile bounds over all pixels of an HSV image.
///
/// `clip_lo_pct`/`clip_hi_pct` are fractions in `[0, 1]`; the defaults
/// 0 and 1 reduce to the channel minimum and maximum. The percentile is
/// nearest-rank: index `round(p * (n - 1))` into the sorted channel.
pub fn dynamic_hsv_bounds(
    img: &Image,
    clip_lo_pct: f64,
    clip_hi_pct: f64,
) -> Result<HsvBounds, KernelError> {
    img.expect_space(ColorSpaceTag::Hsv)?;
    if !(0.0..=1.0).contains(&clip_lo_pct)
        || !(0.0..=1.0).contains(&clip_hi_pct)
        || clip_lo_pct > clip_hi_pct
    {
        return Err(KernelError::BadPercentiles { lo: clip_lo_pct, hi: clip_hi_pct });
    }
    let n = img.pixels().len();
    let rank = |p: f64| -> usize { ((p * (n - 1) as f64) + 0.5).floor() as usize };
    let (lo_idx, hi_idx) = (rank(clip_lo_pct), rank(clip_hi_pct));

    let mut lo = [0u8; 3];
    let mut hi = [0u8; 3];
    let mut channel = Vec::with_capacity(n);
    for c in 0..3 {
        channel.clear();
        channel.extend(img.pixels().iter().map(|p| p.0[c]));
        channel.sort_unstable();
        lo[c] = channel[lo_idx];
        hi[c] = channel[hi_idx];
    }
    HsvBounds::new(Pixel8(lo), Pixel8(hi))
}

/// Keep-mask over an RGB image: `true` where `lo <= pixel <= hi`
/// channelwise. With the default `(1,1,1)..(255,255,255)` bounds any
/// pixel with a zero channel is excluded.
pub fn near_black_mask(img: &Image, lo: Pixel8, hi: Pixel8) -> Result<Mask, KernelError> {
    img.expect_space(ColorSpaceTag::Rgb)?;
    if (0..3).any(|i| lo.0[i] > hi.0[i]) {
        return Err(KernelError::BadBounds);
    }
    let bits = img.pixels().iter().map(|&p| p.in_range(lo, hi)).collect();
    Ok(Mask::from_bits(img.width(), img.height(), bits)?)
}
