import { describe, expect, it } from "vitest";

import { Rng, derivedSeed } from "../src/rng.js";

describe("Rng", () => {
  it("is deterministic for a given seed", () => {
    const a = new Rng(123);
    const b = new Rng(123);
    expect([a.next(), a.next(), a.next()]).toEqual([b.next(), b.next(), b.next()]);
  });

  it("different seeds differ", () => {
    expect(new Rng(1).next()).not.toEqual(new Rng(2).next());
  });

  it("stays in [0, 1)", () => {
    const rng = new Rng(77);
    for (let i = 0; i < 10_000; i++) {
      const value = rng.next();
      expect(value).toBeGreaterThanOrEqual(0);
      expect(value).toBeLessThan(1);
    }
  });

  it("int respects bounds and shuffle permutes", () => {
    const rng = new Rng(5);
    for (let i = 0; i < 1000; i++) {
      const value = rng.int(7);
      expect(value).toBeGreaterThanOrEqual(0);
      expect(value).toBeLessThan(7);
    }
    const items = [1, 2, 3, 4, 5, 6, 7, 8];
    const shuffled = rng.shuffle([...items]);
    expect([...shuffled].sort((a, b) => a - b)).toEqual(items);
  });

  it("derivedSeed separates labels deterministically", () => {
    expect(derivedSeed(7, "split")).toEqual(derivedSeed(7, "split"));
    expect(derivedSeed(7, "split")).not.toEqual(derivedSeed(7, "knn:configs"));
    expect(derivedSeed(7, "split")).not.toEqual(derivedSeed(8, "split"));
  });
});
