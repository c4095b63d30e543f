"""Straight-line reference for the robust OMD agent.

Full matrix inversion every round, no rank-one identities, no shared code
with the library beyond numpy.
"""

import math

import numpy as np


class ReferenceAgent:
    def __init__(self, T, d, epsilon, nu, C, lam=None, alpha=8.0, S=1.0, L=1.0):
        self.d = d
        self.eps = epsilon
        self.C = C
        self.alpha = alpha
        self.S = S
        self.lam = float(d) if lam is None else lam
        self.sigma_min = 1.0 / math.sqrt(T)
        delta = 1.0 / (8.0 * T)
        self.e = (1.0 - epsilon) / (2.0 * (1.0 + epsilon))
        self.kappa = d * math.log(1.0 + L * L * T / (self.sigma_min**2 * self.lam * alpha * d))
        log_conf = math.log(2.0 * T * T / delta)
        self.tau0 = math.sqrt(2.0 * self.kappa) * math.log(3.0 * T) ** self.e / log_conf ** (1.0 / (1.0 + epsilon))
        self.floor = math.sqrt(self.lam * (2.0 + 4.0 * S * S))
        self.log_conf = log_conf
        self.nu = nu
        self.V = self.lam * np.eye(d)
        self.theta = np.zeros(d)
        self.beta = self.floor
        self.t = 0

    def select(self, X):
        Vinv = np.linalg.inv(self.V)
        scores = [x @ self.theta + self.beta * math.sqrt(x @ Vinv @ x) for x in X]
        return int(np.argmax(scores))

    def observe(self, x, r):
        self.t += 1
        t = self.t
        Vinv = np.linalg.inv(self.V)
        norm = math.sqrt(max(0.0, x @ Vinv @ x))
        sigma = max(
            self.nu,
            self.sigma_min,
            math.sqrt(2.0 * self.beta / (self.tau0 * math.sqrt(self.alpha) * t**self.e)) * norm,
            math.sqrt(self.C) * self.kappa**-0.25 * math.sqrt(norm),
        )
        w = norm / (sigma * math.sqrt(self.alpha))
        tau = self.tau0 * math.sqrt(1.0 + w * w) / w * t**self.e
        self.V = self.V + np.outer(x, x) / (self.alpha * sigma * sigma)
        z = (r - x @ self.theta) / sigma
        grad = -min(max(z, -tau), tau) * x / sigma
        theta_tilde = self.theta - np.linalg.inv(self.V) @ grad
        self.theta = self.project(theta_tilde)
        self.beta = 409.0 * self.log_conf * self.tau0 * t**self.e + self.floor

    def project(self, theta_tilde):
        if np.linalg.norm(theta_tilde) <= self.S:
            return theta_tilde
        path = lambda mu: np.linalg.solve(self.V + mu * np.eye(self.d), self.V @ theta_tilde)  # noqa: E731
        lo, hi = 0.0, 1.0
        while np.linalg.norm(path(hi)) > self.S:
            hi *= 2.0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if np.linalg.norm(path(mid)) > self.S:
                lo = mid
            else:
                hi = mid
            if hi - lo <= 1e-15 * hi:
                break
        return path(hi)
