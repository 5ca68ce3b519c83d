/** Trailing-edge debouncer: the operation runs once per quiet period. */

export class Debouncer {
  private handle: ReturnType<typeof setTimeout> | null = null;

  constructor(private readonly delayMs: number = 300) {}

  schedule(op: () => void): void {
    if (this.handle !== null) clearTimeout(this.handle);
    this.handle = setTimeout(() => {
      this.handle = null;
      op();
    }, this.delayMs);
  }

  cancel(): void {
    if (this.handle !== null) {
      clearTimeout(this.handle);
      this.handle = null;
    }
  }

  get pending(): boolean {
    return this.handle !== null;
  }
}
