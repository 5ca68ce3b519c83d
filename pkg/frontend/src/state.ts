/** Editor state and the edit -> debounce -> analyze -> overlay loop. */

import { AnalyzeResponse, ApiClient } from "./api.js";
import { Debouncer } from "./debounce.js";
import { SequenceGate } from "./sequence.js";

export interface EditorState {
  draftText: string;
  selectedType: string | null; // null = auto-detect
  lastResponse: AnalyzeResponse | null;
  analysisPending: boolean;
  networkError: string | null;
}

export class EditorController {
  readonly state: EditorState = {
    draftText: "",
    selectedType: null,
    lastResponse: null,
    analysisPending: false,
    networkError: null,
  };

  private gate = new SequenceGate();

  constructor(
    private client: ApiClient,
    private onChange: (state: EditorState) => void = () => {},
    private debouncer: Debouncer = new Debouncer(300),
  ) {}

  /** Editing schedules one analysis per quiet period. An emptied draft
   * clears the overlay locally without a request. */
  onEdit(text: string): void {
    this.state.draftText = text;
    if (text.trim() === "") {
      this.debouncer.cancel();
      this.gate.invalidate(); // anything in flight is now stale
      this.state.lastResponse = null;
      this.state.analysisPending = false;
      this.state.networkError = null;
      this.onChange(this.state);
      return;
    }
    this.state.analysisPending = true;
    this.onChange(this.state);
    this.debouncer.schedule(() => void this.submit());
  }

  onTypeSelected(typeName: string | null): void {
    this.state.selectedType = typeName;
    if (this.state.draftText.trim() !== "") {
      this.state.analysisPending = true;
      this.onChange(this.state);
      this.debouncer.schedule(() => void this.submit());
    }
  }

  private async submit(): Promise<void> {
    const seq = this.gate.issue();
    try {
      const response = await this.client.analyze(
        this.state.draftText,
        this.state.selectedType,
      );
      if (!this.gate.accept(seq)) return; // stale: a newer request won
      this.state.lastResponse = response;
      this.state.analysisPending = false;
      this.state.networkError = null;
    } catch (error) {
      if (!this.gate.accept(seq)) return;
      // Non-blocking: keep the last overlay, show a banner, let typing
      // continue.
      this.state.analysisPending = false;
      this.state.networkError = error instanceof Error ? error.message : String(error);
    }
    this.onChange(this.state);
  }
}
