/** Minimal virtual-node renderer. */

import { VNode } from "./overlay.js";

export function toElement(node: VNode, doc: Document): HTMLElement {
  const element = doc.createElement(node.tag);
  if (node.className) element.className = node.className;
  if (node.title) element.title = node.title;
  if (node.text !== undefined) element.textContent = node.text;
  for (const child of node.children ?? []) {
    element.appendChild(toElement(child, doc));
  }
  return element;
}

export function mount(container: HTMLElement, node: VNode): void {
  container.replaceChildren(toElement(node, container.ownerDocument));
}
