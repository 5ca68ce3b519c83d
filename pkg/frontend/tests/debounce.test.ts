import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { Debouncer } from "../src/debounce.js";

describe("Debouncer", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it("fires once per quiet period over rapid calls", () => {
    const debouncer = new Debouncer(300);
    const op = vi.fn();
    for (let i = 0; i < 10; i++) {
      debouncer.schedule(op);
      vi.advanceTimersByTime(50); // keystrokes 50ms apart, never quiet
    }
    expect(op).not.toHaveBeenCalled();
    vi.advanceTimersByTime(300);
    expect(op).toHaveBeenCalledTimes(1);
  });

  it("fires again after a second quiet period", () => {
    const debouncer = new Debouncer(300);
    const op = vi.fn();
    debouncer.schedule(op);
    vi.advanceTimersByTime(300);
    debouncer.schedule(op);
    vi.advanceTimersByTime(300);
    expect(op).toHaveBeenCalledTimes(2);
  });

  it("cancel drops the pending run", () => {
    const debouncer = new Debouncer(300);
    const op = vi.fn();
    debouncer.schedule(op);
    expect(debouncer.pending).toBe(true);
    debouncer.cancel();
    vi.advanceTimersByTime(1000);
    expect(op).not.toHaveBeenCalled();
    expect(debouncer.pending).toBe(false);
  });
});
