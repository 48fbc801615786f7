//! Contrast-limited adaptive histogram equalization on the Lab L channel.

use super::KernelError;
use crate::color::{lab_to_rgb_f64, quantize, rgb_to_lab_f64, ColorSpaceTag, Pixel8};
use crate::raster::{reflect101, Image};

/// Equalizes local contrast of the lightness channel.
///
/// The image is converted to Lab; the quantized L plane is split into a
/// `tiles_x` x `tiles_y` grid (padded by reflection when dimensions do
/// not divide evenly). Each tile's 256-bin histogram is clipped at
/// `clip_limit * tile_pixels / 256` with the excess redistributed
/// uniformly (single pass, stepped residual), then turned into a lookup
/// table through its cumulative distribution. Every pixel's new L value
/// bilinearly interpolates the four surrounding tile tables; a and b are
/// carried through at full precision and the result converts back to RGB.
pub fn clahe_l_channel(
    img: &Image,
    clip_limit: f64,
    tiles_x: usize,
    tiles_y: usize,
) -> Result<Image, KernelError> {
    img.expect_space(ColorSpaceTag::Rgb)?;
    if clip_limit <= 0.0 {
        return Err(KernelError::BadClipLimit(clip_limit));
    }
    if tiles_x < 1 || tiles_y < 1 {
        return Err(KernelError::BadTileGrid(tiles_x, tiles_y));
    }

    let (width, height) = (img.width(), img.height());
    let lab: Vec<[f64; 3]> = img.pixels().iter().map(|p| rgb_to_lab_f64(p.as_f64())).collect();
    let l8: Vec<u8> = lab.iter().map(|l| quantize(l[0])).collect();

    // Pad so tiles divide evenly; sampling reflects into the image.
    let ext_w = width.div_ceil(tiles_x) * tiles_x;
    let ext_h = height.div_ceil(tiles_y) * tiles_y;
    let tile_w = ext_w / tiles_x;
    let tile_h = ext_h / tiles_y;

    let luts = compute_tile_luts(&l8, width, height, tiles_x, tiles_y, tile_w, tile_h, clip_limit);

    let mut out = Vec::with_capacity(width * height);
    for y in 0..height {
        let (ty1, ty2, fy) = tile_coords(y, tile_h, tiles_y);
        for x in 0..width {
            let (tx1, tx2, fx) = tile_coords(x, tile_w, tiles_x);
            let v = l8[y * width + x] as usize;
            let top = (1.0 - fx) * luts[ty1 * tiles_x + tx1][v] as f64
                + fx * luts[ty1 * tiles_x + tx2][v] as f64;
            let bottom = (1.0 - fx) * luts[ty2 * tiles_x + tx1][v] as f64
                + fx * luts[ty2 * tiles_x + tx2][v] as f64;
            let new_l = (1.0 - fy) * top + fy * bottom;
            let [_, a, b] = lab[y * width + x];
            let rgb = lab_to_rgb_f64([new_l, a, b]);
            out.push(Pixel8([quantize(rgb[0]), quantize(rgb[1]), quantize(rgb[2])]));
        }
    }
    Ok(Image::new(width, height, ColorSpaceTag::Rgb, out)?)
}

/// Interpolation coordinates for one axis: the two neighbor tile
/// indices and the fractional weight of the second one.
fn tile_coords(p: usize, tile: usize, tiles: usize) -> (usize, usize, f64) {
    let f = p as f64 / tile as f64 - 0.5;
    let i = f.floor();
    let frac = f - i;
    let i1 = if i < 0.0 { 0 } else { i as usize };
    let i2 = (i1 + 1).min(tiles - 1);
    let i2 = if i < 0.0 { i1 } else { i2 };
    (i1.min(tiles - 1), i2, if i < 0.0 || i as usize + 1 > tiles - 1 { 0.0 } else { frac })
}

#[allow(clippy::too_many_arguments)]
fn compute_tile_luts(
    l8: &[u8],
    width: usize,
    height: usize,
    tiles_x: usize,
    tiles_y: usize,
    tile_w: usize,
    tile_h: usize,
    clip_limit: f64,
) -> Vec<[u8; 256]> {
    let mut luts = Vec::with_capacity(tiles_x * tiles_y);
    for ty in 0..tiles_y {
        for tx in 0..tiles_x {
            let mut hist = [0u64; 256];
            for dy in 0..tile_h {
                let sy = reflect101((ty * tile_h + dy) as isize, height);
                for dx in 0..tile_w {
                    let sx = reflect101((tx * tile_w + dx) as isize, width);
                    hist[l8[sy * width + sx] as usize] += 1;
                }
            }
            luts.push(lut_from_hist(&hist, tile_w * tile_h, clip_limit));
        }
    }
    luts
}

fn lut_from_hist(hist: &[u64; 256], area: usize, clip_limit: f64) -> [u8; 256] {
    let mut hist = *hist;
    let clip = ((clip_limit * area as f64 / 256.0).max(1.0)) as u64;

    let mut excess = 0u64;
    for bin in hist.iter_mut() {
        if *bin > clip {
            excess += *bin - clip;
            *bin = clip;
        }
    }
    // One uniform pass; the remainder is spread at a fixed stride.
    let batch = excess / 256;
    let mut residual = excess % 256;
    if batch > 0 {
        for bin in hist.iter_mut() {
            *bin += batch;
        }
    }
    if residual > 0 {
        let step = (256 / residual as usize).max(1);
        let mut i = 0;
        while residual > 0 && i < 256 {
            hist[i] += 1;
            residual -= 1;
            i += step;
        }
    }

    let scale = 255.0 / area as f64;
    let mut lut = [0u8; 256];
    let mut cdf = 0u64;
    for (i, &h) in hist.iter().enumerate() {
        cdf += h;
        lut[i] = quantize(cdf as f64 * scale);
    }
    lut
}
