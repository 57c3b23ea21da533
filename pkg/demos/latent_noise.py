"""
Noise on the latent segmentation
================================

The three perturbations applied to the logits before the reconstruction
generator, and what they do to the measured SNR.
"""

import math

import torch

from segcycle.metrics import measure_snr
from segcycle.noise import build_codebook, gaussian_inject, max_only, quantize

torch.manual_seed(0)

# a batch of 4-class logits, 2 images of 16x16
logits = torch.randn(2, 4, 16, 16, dtype=torch.float64) * 1.5

# the 2-bit codebook spans [-1, 1] with equal spacing
print("2-bit levels:", build_codebook(2).tolist())

# quantization saturates and snaps to the nearest level
q = quantize(logits, 2)
print("distinct values after quantization:", sorted(set(q.flatten().tolist())))
print("SNR after 2-bit quantization: %.2f dB" % measure_snr(logits, q))

# the backward pass ignores the rounding
x = logits.clone().requires_grad_()
quantize(x, 2).sum().backward()
print("gradient is all ones:", bool((x.grad == 1).all()))

# max-only keeps one value per pixel
m = max_only(logits)
print("non-zero entries per pixel:", int((m != 0).sum(1).max()))
print("SNR after max-only: %.2f dB" % measure_snr(logits, m))

# Gaussian noise with sigma set from a target SNR; the measured value sits
# 10*log10(S) below the target because the noise is added to every channel
g = torch.Generator().manual_seed(1)
noisy = gaussian_inject(logits, 7.38, g)
print("target 7.38 dB, measured %.2f dB, expected %.2f dB"
      % (measure_snr(logits, noisy), 7.38 - 10 * math.log10(4)))
