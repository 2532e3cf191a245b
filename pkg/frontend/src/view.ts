/** DOM rendering for the console: ranked board, adjacency-grid graph entry,
 *  and the known-theorems panel.  The whole app re-renders from store state;
 *  the draft lives outside the store because it is purely local until
 *  submitted. */

import { GraphDraft } from "./draft.js";
import { BoardStore } from "./store.js";
import type { ConjectureView } from "./types.js";

export class ConsoleView {
  private readonly root: HTMLElement;
  private readonly store: BoardStore;
  readonly draft: GraphDraft;

  constructor(root: HTMLElement, store: BoardStore) {
    this.root = root;
    this.store = store;
    this.draft = new GraphDraft(4);
    store.subscribe(() => this.render());
  }

  render(): void {
    const state = this.store.state;
    this.root.textContent = "";

    if (!state.connected) {
      const banner = el("div", "banner banner-error");
      banner.setAttribute("data-role", "connection-banner");
      banner.textContent = `Cannot reach the session service: ${
        state.connectionError ?? "unknown error"
      }`;
      this.root.append(banner);
      const retry = el("button", "retry") as HTMLButtonElement;
      retry.textContent = "Retry";
      retry.addEventListener("click", () => void this.store.refresh());
      this.root.append(retry);
      return;
    }

    const header = el("header");
    const title = el("h1");
    title.textContent = "Conjecture console";
    header.append(title);
    if (state.summary) {
      const meta = el("div", "session-meta");
      meta.setAttribute("data-role", "session-meta");
      meta.textContent =
        `${state.summary.graphs} graphs | ` +
        `${state.summary.known_theorems} known theorems`;
      header.append(meta);
    }
    this.root.append(header);

    if (state.notice) {
      const notice = el("div", "banner banner-notice");
      notice.setAttribute("data-role", "notice");
      notice.textContent = state.notice;
      this.root.append(notice);
    }
    if (state.inlineError) {
      const err = el("div", "banner banner-inline-error");
      err.setAttribute("data-role", "inline-error");
      err.textContent = state.inlineError;
      this.root.append(err);
    }
    if (state.falsified.length > 0) {
      const flash = el("div", "banner banner-falsified");
      flash.setAttribute("data-role", "falsified-flash");
      const label = el("div");
      label.textContent = "Falsified and removed:";
      flash.append(label);
      for (const conjecture of state.falsified) {
        const line = el("div", "falsified-text");
        line.textContent = conjecture.text;
        flash.append(line);
      }
      this.root.append(flash);
    }

    const main = el("main");
    main.append(this.renderBoard());
    const side = el("aside");
    side.append(this.renderDraftPanel(), this.renderTheorems());
    main.append(side);
    this.root.append(main);
  }

  private renderBoard(): HTMLElement {
    const state = this.store.state;
    const section = el("section", "board");
    section.setAttribute("data-role", "board");

    const picker = el("label");
    picker.textContent = "Target: ";
    const select = el("select") as HTMLSelectElement;
    select.setAttribute("data-role", "target-select");
    for (const column of state.summary?.numeric_columns ?? []) {
      const option = el("option") as HTMLOptionElement;
      option.value = column;
      option.textContent = column;
      if (column === state.selectedTarget) option.selected = true;
      select.append(option);
    }
    select.addEventListener("change", () => {
      void this.store.selectTarget(select.value);
    });
    picker.append(select);
    section.append(picker);

    if (!state.board) {
      return section;
    }
    for (const [label, list, role] of [
      ["Upper bounds", state.board.upper, "upper-list"],
      ["Lower bounds", state.board.lower, "lower-list"],
    ] as const) {
      const heading = el("h2");
      heading.textContent = label;
      section.append(heading);
      const container = el("div");
      container.setAttribute("data-role", role);
      if (list.length === 0) {
        const empty = el("div", "empty-pool");
        empty.textContent = "No conjectures survive filtering.";
        container.append(empty);
      }
      for (const conjecture of list) {
        container.append(this.renderCard(conjecture));
      }
      section.append(container);
    }
    return section;
  }

  private renderCard(conjecture: ConjectureView): HTMLElement {
    const card = el("article", "conjecture-card");
    card.setAttribute("data-role", "conjecture-card");
    card.setAttribute("data-id", conjecture.id);

    const badge = el("span", `relation-badge relation-${badgeName(conjecture.relation)}`);
    badge.textContent = conjecture.relation;
    const text = el("span", "conjecture-text");
    text.textContent = conjecture.text;
    const touch = el("span", "touch");
    touch.textContent = `equality on ${conjecture.touch} graphs`;
    card.append(badge, text, touch);

    const sharps = el("details", "sharps");
    const summary = el("summary");
    summary.textContent = `sharp graphs (${conjecture.sharps.length})`;
    sharps.append(summary);
    const names = el("div");
    names.textContent = conjecture.sharps.join(", ") || "none";
    sharps.append(names);
    card.append(sharps);

    const mark = el("button", "mark-theorem") as HTMLButtonElement;
    mark.setAttribute("data-role", "mark-theorem");
    mark.textContent = "Mark as known theorem";
    mark.disabled = this.store.state.pending;
    mark.addEventListener("click", () => void this.store.markTheorem(conjecture.id));
    card.append(mark);
    return card;
  }

  private renderDraftPanel(): HTMLElement {
    const state = this.store.state;
    const section = el("section", "draft-panel");
    section.setAttribute("data-role", "draft-panel");
    const heading = el("h2");
    heading.textContent = "Counterexample graph";
    section.append(heading);

    const spinnerLabel = el("label");
    spinnerLabel.textContent = "Vertices: ";
    const spinner = el("input") as HTMLInputElement;
    spinner.type = "number";
    spinner.min = "1";
    spinner.max = "20";
    spinner.value = String(this.draft.vertexCount);
    spinner.setAttribute("data-role", "vertex-count");
    spinner.addEventListener("change", () => {
      const value = Number(spinner.value);
      if (Number.isInteger(value) && value >= 1) {
        this.draft.setVertexCount(value);
        this.render();
      }
    });
    spinnerLabel.append(spinner);
    section.append(spinnerLabel);

    section.append(this.renderGrid());

    const flags = this.draft.flags();
    if (flags.outOfRange.length > 0) {
      const warn = el("div", "draft-warning");
      warn.setAttribute("data-role", "draft-warning");
      warn.textContent = `${flags.outOfRange.length} edge(s) outside the vertex range`;
      section.append(warn);
    }

    const submit = el("button", "submit-draft") as HTMLButtonElement;
    submit.setAttribute("data-role", "submit-draft");
    submit.textContent = "Submit counterexample";
    submit.disabled = !this.draft.isValid() || state.pending;
    submit.addEventListener("click", () => {
      void this.store.submitDraft(this.draft).then(() => {
        if (this.store.state.inlineError === null) this.draft.clear();
        this.render();
      });
    });
    section.append(submit);

    const pasteLabel = el("label");
    pasteLabel.textContent = "graph6 paste: ";
    const paste = el("input") as HTMLInputElement;
    paste.type = "text";
    paste.setAttribute("data-role", "graph6-input");
    pasteLabel.append(paste);
    const pasteSubmit = el("button") as HTMLButtonElement;
    pasteSubmit.setAttribute("data-role", "submit-graph6");
    pasteSubmit.textContent = "Submit graph6";
    pasteSubmit.disabled = state.pending;
    pasteSubmit.addEventListener("click", () => {
      void this.store.submitGraph6(paste.value);
    });
    section.append(pasteLabel, pasteSubmit);
    return section;
  }

  private renderGrid(): HTMLElement {
    const n = this.draft.vertexCount;
    const table = el("table", "adjacency-grid") as HTMLTableElement;
    table.setAttribute("data-role", "adjacency-grid");
    const head = table.createTHead().insertRow();
    head.insertCell();
    for (let v = 0; v < n; v += 1) {
      const cell = head.insertCell();
      cell.textContent = String(v);
    }
    const body = table.createTBody();
    for (let u = 0; u < n; u += 1) {
      const row = body.insertRow();
      const label = row.insertCell();
      label.textContent = String(u);
      for (let v = 0; v < n; v += 1) {
        const cell = row.insertCell();
        cell.setAttribute("data-role", "grid-cell");
        cell.setAttribute("data-edge", `${u}-${v}`);
        if (u === v) {
          cell.className = "grid-diagonal";
        } else {
          cell.className = this.draft.has(u, v) ? "grid-on" : "grid-off";
          cell.textContent = this.draft.has(u, v) ? "1" : "";
          cell.addEventListener("click", () => {
            this.draft.toggle(u, v);
            this.render();
          });
        }
      }
    }
    return table;
  }

  private renderTheorems(): HTMLElement {
    const section = el("section", "theorems-panel");
    section.setAttribute("data-role", "theorems-panel");
    const heading = el("h2");
    heading.textContent = "Known theorems";
    section.append(heading);
    const list = el("ol");
    for (const theorem of this.store.state.theorems) {
      const item = el("li", "theorem-text");
      item.setAttribute("data-role", "theorem-entry");
      item.textContent = theorem.text;
      list.append(item);
    }
    section.append(list);
    return section;
  }
}

function el(tag: string, className?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  return node;
}

function badgeName(relation: string): string {
  if (relation === "<=") return "le";
  if (relation === ">=") return "ge";
  return "eq";
}
