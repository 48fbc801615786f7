//! Per-channel intensity histograms over masked pixels.

use super::KernelError;
use crate::color::ColorSpaceTag;
use crate::raster::{Image, Mask};

/// Counts kept pixels per channel into `bins` buckets.
///
/// With `bins = 256` each 8-bit level gets its own bucket; other counts
/// bucket by `value * bins / 256`. Per channel, the counts sum to the
/// number of kept pixels.
pub fn rgb_histogram(
    img: &Image,
    keep: &Mask,
    bins: usize,
) -> Result<[Vec<u64>; 3], KernelError> {
    img.expect_space(ColorSpaceTag::Rgb)?;
    keep.matches(img)?;
    assert!(bins >= 1 && bins <= 256, "bins must be in 1..=256");

    let mut hist = [vec![0u64; bins], vec![0u64; bins], vec![0u64; bins]];
    for (px, &kept) in img.pixels().iter().zip(keep.bits()) {
        if !kept {
            continue;
        }
        for c in 0..3 {
            hist[c][px.0[c] as usize * bins / 256] += 1;
        }
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::{ColorSpaceTag::Rgb, Pixel8};
    use rand::{Rng, SeedableRng};

    #[test]
    fn constant_black_fills_bin_zero() {
        let img = Image::filled(2, 2, Rgb, Pixel8::new(0, 0, 0));
        let keep = Mask::filled(2, 2, true);
        let hist = rgb_histogram(&img, &keep, 256).unwrap();
        for c in 0..3 {
            assert_eq!(hist[c][0], 4);
            assert_eq!(hist[c].iter().sum::<u64>(), 4);
        }
    }

    #[test]
    fn empty_mask_yields_zero_histograms() {
        let img = Image::filled(3, 3, Rgb, Pixel8::new(9, 9, 9));
        let keep = Mask::filled(3, 3, false);
        let hist = rgb_histogram(&img, &keep, 256).unwrap();
        for c in 0..3 {
            assert!(hist[c].iter().all(|&n| n == 0));
        }
    }

    #[test]
    fn matches_tally_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let data: Vec<Pixel8> = (0..64).map(|_| Pixel8::new(rng.gen(), rng.gen(), rng.gen())).collect();
            let img = Image::new(8, 8, Rgb, data).unwrap();
            let bits: Vec<bool> = (0..64).map(|_| rng.gen()).collect();
            let keep = Mask::from_bits(8, 8, bits).unwrap();
            let hist = rgb_histogram(&img, &keep, 256).unwrap();

            let mut oracle = [vec![0u64; 256], vec![0u64; 256], vec![0u64; 256]];
            for y in 0..8 {
                for x in 0..8 {
                    if keep.get(x, y) {
                        let p = img.get(x, y);
                        for c in 0..3 {
                            oracle[c][p.0[c] as usize] += 1;
                        }
                    }
                }
            }
            assert_eq!(hist, oracle);
            for c in 0..3 {
                assert_eq!(hist[c].iter().sum::<u64>(), keep.count() as u64);
            }
        }
    }
}
