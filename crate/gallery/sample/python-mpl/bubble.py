import pandas as pd
import matplotlib.pyplot as plt

cars = pd.read_csv("data/cars.csv")
fig, ax = plt.subplots()
for origin, group in cars.groupby("origin"):
    ax.scatter(group["horsepower"], group["mpg"], s=group["weight"] / 20, alpha=0.5, label=origin)
ax.set_xlabel("horsepower")
ax.set_ylabel("mpg")
ax.legend(title="origin")
plt.show()
