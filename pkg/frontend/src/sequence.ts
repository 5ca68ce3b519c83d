/** Monotonic request bookkeeping: every request gets a sequence number,
 * and only responses newer than the last accepted one are applied, so a
 * stale overlay is never rendered as current. */

export class SequenceGate {
  private nextSeq = 1;
  private lastAccepted = 0;

  issue(): number {
    return this.nextSeq++;
  }

  /** True when this response should be applied; later calls with older
   * sequence numbers return false. */
  accept(seq: number): boolean {
    if (seq <= this.lastAccepted) return false;
    this.lastAccepted = seq;
    return true;
  }

  /** Mark everything currently in flight as stale. */
  invalidate(): void {
    this.lastAccepted = this.nextSeq - 1;
  }
}
